//! Orlik–Solomon algebra, the projective model H^•(U) = ker ∂, and the
//! linear-form matrices φ_i of the Aomoto complex.

pub mod algebra;
pub mod triple;

use std::collections::HashMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub use algebra::{monomial_label, wedge_sign, OSAlgebra, Sparse};
pub use triple::triple_point_matrix;

use crate::error::{Error, Result};
use crate::linalg::{modp, MatPoly, MatQ, Rat};
use crate::matroid::{is_indecomposable, Arrangement, BettiTable, MatroidData};
use crate::par;
use crate::sample::random_vector;

/// One degree of H^•(U): basis vectors in NBC coordinates plus the NBC
/// positions at which coordinates are read off. Basis vector `j` is 1 at
/// `read[j]` and 0 at every other read position.
#[derive(Clone, Debug)]
pub struct ProjectiveDegree {
    pub basis: Vec<Vec<Rat>>,
    pub read: Vec<usize>,
}

impl ProjectiveDegree {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `u` (an element of ker ∂, NBC coordinates) in this basis.
    /// Fails if `u` is not in the span.
    pub fn coords(&self, u: &Sparse) -> Result<Vec<Rat>> {
        let c: Vec<Rat> = self
            .read
            .iter()
            .map(|p| u.get(p).cloned().unwrap_or_else(Rat::zero))
            .collect();
        let width = self.basis.first().map_or(0, Vec::len);
        for pos in 0..width {
            let recon: Rat = c.iter().zip(&self.basis).map(|(x, b)| x * &b[pos]).sum();
            if recon != u.get(&pos).cloned().unwrap_or_else(Rat::zero) {
                return Err(Error::Consistency("product left the projective subalgebra".into()));
            }
        }
        Ok(c)
    }
}

/// H^i(U) for 0 <= i < n, realized inside the OS algebra as ker ∂.
#[derive(Clone, Debug)]
pub struct ProjectiveModel {
    pub os: OSAlgebra,
    pub betti: BettiTable,
    pub degrees: Vec<ProjectiveDegree>,
}

impl ProjectiveModel {
    pub fn new(m: &MatroidData, betti: &BettiTable) -> Result<ProjectiveModel> {
        let os = OSAlgebra::new(m);
        let n = betti.n();
        let d = m.d();
        let mut degrees = Vec::with_capacity(n);
        for i in 0..n {
            let deg = match i {
                0 => ProjectiveDegree {
                    basis: vec![vec![Rat::one()]],
                    read: vec![0],
                },
                1 => ProjectiveDegree {
                    basis: (0..d - 1)
                        .map(|k| {
                            let mut v = vec![Rat::zero(); d];
                            v[k] = Rat::one();
                            v[d - 1] = Rat::from(-1);
                            v
                        })
                        .collect(),
                    read: (0..d - 1).collect(),
                },
                _ => {
                    let ns = os.boundary(i).rank_and_nullspace();
                    ProjectiveDegree {
                        basis: ns.basis,
                        read: ns.free,
                    }
                }
            };
            if deg.dim() as i64 != betti.b[i] {
                return Err(Error::DimensionMismatch {
                    expected: betti.b[i] as usize,
                    found: deg.dim(),
                    context: format!("dimension of H^{i}(U)"),
                });
            }
            degrees.push(deg);
        }
        Ok(ProjectiveModel {
            os,
            betti: betti.clone(),
            degrees,
        })
    }

    pub fn n(&self) -> usize {
        self.degrees.len()
    }

    pub fn b(&self, i: usize) -> usize {
        self.degrees[i].dim()
    }

    fn to_sparse(v: &[Rat]) -> Sparse {
        v.iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(k, x)| (k, x.clone()))
            .collect()
    }

    /// (e_k - e_d) ∧ w for `w` in NBC coordinates of degree i.
    fn mult_sparse(&self, k: usize, w: &Sparse, i: usize, memo: &mut HashMap<u64, Sparse>) -> Sparse {
        let d = self.os.matroid().d();
        let mut u = self.os.wedge_generator(k, w, i, memo);
        let last = self.os.wedge_generator(d - 1, w, i, memo);
        for (p, x) in last {
            let e = u.entry(p).or_insert_with(Rat::zero);
            *e = &*e - &x;
            if e.is_zero() {
                u.remove(&p);
            }
        }
        u
    }

    /// Matrix of w ↦ (e_k - e_d) ∧ w from H^i(U) to H^(i+1)(U); `k` is zero based.
    pub fn left_mult(&self, k: usize, i: usize) -> Result<MatQ> {
        let mut memo = HashMap::new();
        self.left_mult_with(k, i, &mut memo)
    }

    fn left_mult_with(&self, k: usize, i: usize, memo: &mut HashMap<u64, Sparse>) -> Result<MatQ> {
        let (src, dst) = (&self.degrees[i], &self.degrees[i + 1]);
        let mut out = MatQ::zeros(dst.dim(), src.dim());
        for (col, w) in src.basis.iter().enumerate() {
            let u = self.mult_sparse(k, &Self::to_sparse(w), i, memo);
            for (row, x) in dst.coords(&u)?.into_iter().enumerate() {
                out.set(row, col, x);
            }
        }
        Ok(out)
    }

    /// (Σ_k v_k (e_k - e_d)) ∧ w computed by straightening; both `w` and the
    /// result are in projective coordinates.
    pub fn multiply(&self, v: &[Rat], w: &[Rat], i: usize) -> Result<Vec<Rat>> {
        let src = &self.degrees[i];
        let mut elem = vec![Rat::zero(); src.basis.first().map_or(0, Vec::len)];
        for (c, b) in w.iter().zip(&src.basis) {
            for (e, x) in elem.iter_mut().zip(b) {
                *e = &*e + &(c * x);
            }
        }
        let elem = Self::to_sparse(&elem);
        let mut memo = HashMap::new();
        let mut acc = Sparse::new();
        for (k, vk) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (p, x) in self.mult_sparse(k, &elem, i, &mut memo) {
                let e = acc.entry(p).or_insert_with(Rat::zero);
                *e = &*e + &(vk * &x);
                if e.is_zero() {
                    acc.remove(&p);
                }
            }
        }
        self.degrees[i + 1].coords(&acc)
    }

    /// Basis labels: degree-1 vectors are "e_k - e_d", higher degrees list
    /// their NBC expansion.
    pub fn labels(&self, i: usize) -> Vec<String> {
        let d = self.os.matroid().d();
        if i == 1 {
            return (0..d - 1).map(|k| format!("e{} - e{}", k + 1, d)).collect();
        }
        let basis = self.os.basis(i);
        self.degrees[i]
            .basis
            .iter()
            .map(|v| {
                let terms: Vec<String> = v
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(p, x)| {
                        let m = monomial_label(basis[p]);
                        if x.is_one() {
                            m
                        } else {
                            format!("{x}*{m}")
                        }
                    })
                    .collect();
                terms.join(" + ")
            })
            .collect()
    }
}

/// The complex (H^•(U), v ∪ ·) globalized over v: φ_i = Σ_k x_k L_(k,i) where
/// L_(k,i) is left multiplication by e_k - e_d on H^i(U).
#[derive(Clone, Debug)]
pub struct AomotoComplex {
    pub model: ProjectiveModel,
    /// left[i][k] = L_(k,i), a b_(i+1) x b_i matrix.
    pub left: Vec<Vec<MatQ>>,
    pub phis: Vec<MatPoly>,
    left_modp: Vec<Option<Vec<modp::SparseResidues>>>,
}

/// Verification outcome: symbolic compositions and sampled generic ranks.
#[derive(Clone, Debug, Serialize)]
pub struct ComplexReport {
    pub compositions_zero: Vec<bool>,
    pub sampled_ranks: Vec<Vec<usize>>,
    pub expected_ranks: Vec<i64>,
    pub failures: Vec<String>,
}

impl ComplexReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Points used by `verify_complex`.
pub const VERIFY_POINTS: usize = 5;

impl AomotoComplex {
    /// Build without running the verification (used by the verifier's own tests).
    pub fn build_unchecked(model: ProjectiveModel) -> Result<AomotoComplex> {
        let n = model.n();
        let b1 = if n > 1 { model.b(1) } else { 0 };
        let left: Vec<Vec<MatQ>> = (0..n.saturating_sub(1))
            .map(|i| {
                let per_k: Vec<Result<MatQ>> = par::map_range(b1, |k| model.left_mult(k, i));
                per_k.into_iter().collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        let phis = left.iter().map(|ls| MatPoly::from_linear_pencil(ls)).collect();
        let left_modp = left
            .iter()
            .map(|ls| {
                if ls.is_empty() {
                    return None;
                }
                ls.iter().map(modp::SparseResidues::new).collect()
            })
            .collect();
        Ok(AomotoComplex {
            model,
            left,
            phis,
            left_modp,
        })
    }

    pub fn n(&self) -> usize {
        self.model.n()
    }

    /// Number of variables, b_1.
    pub fn nvars(&self) -> usize {
        if self.n() > 1 {
            self.model.b(1)
        } else {
            0
        }
    }

    pub fn betti(&self) -> &BettiTable {
        &self.model.betti
    }

    pub fn b(&self, i: usize) -> usize {
        self.model.b(i)
    }

    pub fn beta(&self, i: usize) -> usize {
        self.betti().beta[i] as usize
    }

    /// φ_i for 0 <= i <= n-2.
    pub fn phi(&self, i: usize) -> &MatPoly {
        &self.phis[i]
    }

    /// φ_i evaluated at v, computed from the constant pencil.
    pub fn eval_phi(&self, i: usize, v: &[Rat]) -> Result<MatQ> {
        if v.len() != self.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                found: v.len(),
                context: "point of H^1(U)".into(),
            });
        }
        let ls = &self.left[i];
        let mut out = MatQ::zeros(self.b(i + 1), self.b(i));
        for (vk, l) in v.iter().zip(ls) {
            if !vk.is_zero() {
                out = out.add(&l.scale(vk));
            }
        }
        Ok(out)
    }

    /// Rank of φ_i at v; φ_(-1) and φ_(n-1) are zero.
    pub fn rank_at(&self, i: i64, v: &[Rat]) -> Result<usize> {
        if i < 0 || i as usize + 1 >= self.n() {
            return Ok(0);
        }
        let i = i as usize;
        let cap = self.beta(i);
        if let (Some(ls), Some(s)) = (&self.left_modp[i], residues(v)) {
            if v.len() != self.nvars() {
                return Err(Error::DimensionMismatch {
                    expected: self.nvars(),
                    found: v.len(),
                    context: "point of H^1(U)".into(),
                });
            }
            let r = modp::rank_rows(modp::combine(ls, &s), self.b(i));
            if r >= cap {
                return Ok(r);
            }
        }
        Ok(self.eval_phi(i, v)?.rank())
    }
}

fn residues(v: &[Rat]) -> Option<Vec<u64>> {
    v.iter().map(modp::residue).collect()
}

/// Build the Aomoto complex of an essential indecomposable arrangement and
/// verify it before returning.
pub fn aomoto(a: &Arrangement) -> Result<AomotoComplex> {
    let m = MatroidData::build(a)?;
    let betti = m.betti()?;
    if !a.is_essential() {
        return Err(Error::DimensionMismatch {
            expected: a.n(),
            found: a.rank(),
            context: "arrangement must be essential".into(),
        });
    }
    if !is_indecomposable(&m, &betti)? {
        return Err(Error::Decomposable);
    }
    let c = AomotoComplex::build_unchecked(ProjectiveModel::new(&m, &betti)?)?;
    let report = verify_complex(&c, 0);
    if !report.passed() {
        return Err(Error::Consistency(report.failures.join("; ")));
    }
    Ok(c)
}

/// Check φ_(i+1) φ_i = 0 symbolically and rank φ_i = β_i at seeded points.
pub fn verify_complex(c: &AomotoComplex, seed: u64) -> ComplexReport {
    let n = c.n();
    let mut failures = Vec::new();
    let compositions_zero: Vec<bool> = (0..n.saturating_sub(2))
        .map(|i| {
            let ok = c.phi(i + 1).mul(c.phi(i)).map(|p| p.is_zero()).unwrap_or(false);
            if !ok {
                failures.push(format!("phi_{} * phi_{i} != 0", i + 1));
            }
            ok
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points: Vec<Vec<Rat>> = (0..VERIFY_POINTS).map(|_| random_vector(&mut rng, c.nvars())).collect();
    let expected_ranks: Vec<i64> = (0..n.saturating_sub(1)).map(|i| c.betti().beta[i]).collect();
    let sampled_ranks: Vec<Vec<usize>> = (0..n.saturating_sub(1))
        .map(|i| par::map(&points, |v| c.eval_phi(i, v).map(|m| m.rank()).unwrap_or(usize::MAX)))
        .collect();
    for (i, ranks) in sampled_ranks.iter().enumerate() {
        for r in ranks {
            if *r as i64 != expected_ranks[i] {
                failures.push(format!(
                    "rank phi_{i} = {r} at a sample point, expected beta_{i} = {}",
                    expected_ranks[i]
                ));
            }
        }
    }
    ComplexReport {
        compositions_zero,
        sampled_ranks,
        expected_ranks,
        failures,
    }
}

/// JSON bundle: per-degree basis labels and the φ matrices.
#[derive(Clone, Debug, Serialize)]
pub struct ComplexBundle {
    pub hyperplane_order: Vec<usize>,
    pub nbc_bases: Vec<Vec<String>>,
    pub projective_bases: Vec<Vec<String>>,
    pub phi_shapes: Vec<(usize, usize)>,
    pub phis: Vec<MatPoly>,
}

impl AomotoComplex {
    pub fn bundle(&self) -> ComplexBundle {
        let os = &self.model.os;
        ComplexBundle {
            hyperplane_order: (1..=os.matroid().d()).collect(),
            nbc_bases: (0..=os.matroid().rank())
                .map(|i| os.basis(i).iter().map(|&s| monomial_label(s)).collect())
                .collect(),
            projective_bases: (0..self.n()).map(|i| self.model.labels(i)).collect(),
            phi_shapes: self.phis.iter().map(|p| (p.rows(), p.cols())).collect(),
            phis: self.phis.clone(),
        }
    }
}
