//! Codimension brackets for R^i_j and the q_(n-2) > 1 probe.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::discover::Discovery;
use crate::error::{Error, Result};
use crate::linalg::{MatQ, Rat};
use crate::os::AomotoComplex;
use crate::sample::small_vector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProbeVerdict {
    Supports,
    Contradicts,
    Inconclusive,
}

/// Theory bounds on codim R^i_j evaluated from the Betti numbers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoryBounds {
    /// n - 1 - i.
    pub lower: i64,
    /// d - 1.
    pub ambient: i64,
    /// (β_(i-1) + j)(β_(i+1) + j).
    pub eagon: i64,
    /// β_(i+1) + i + 1, only for j = 1.
    pub degree: Option<i64>,
    pub upper: i64,
}

impl TheoryBounds {
    pub fn new(c: &AomotoComplex, i: usize, j: usize) -> TheoryBounds {
        let t = c.betti();
        let (n, d) = (t.n() as i64, t.d() as i64);
        let i = i as i64;
        let j = j as i64;
        let eagon = (t.beta(i - 1) + j) * (t.beta(i + 1) + j);
        let degree = (j == 1).then(|| t.beta(i + 1) + i + 1);
        let upper = [Some(d - 1), Some(eagon), degree]
            .into_iter()
            .flatten()
            .min()
            .expect("nonempty");
        TheoryBounds {
            lower: (n - 1 - i).max(0),
            ambient: d - 1,
            eagon,
            degree,
            upper,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CodimensionEvidence {
    pub verdict: ProbeVerdict,
    pub largest_component_dim: usize,
    pub codim_one_dim: usize,
    pub q_lower: i64,
    pub q_upper: i64,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CodimReport {
    pub i: usize,
    pub j: usize,
    pub dim_lower: usize,
    pub q_lower: i64,
    pub q_upper: i64,
    pub exact: bool,
    pub theory: TheoryBounds,
    /// Degree of gcd of two projected minors of φ_i along a random pencil
    /// u + t w. Zero certifies (up to a measure-zero choice of pencil) that
    /// R^i_j has no codimension-one component, so q >= 2.
    pub pencil_gcd_degree: Option<usize>,
    /// (β_(i-1) + j)(β_(i+1) + j) < d - 2, under which P(R^i_j) is connected.
    pub connectivity_hypothesis: bool,
    /// Whether the discovered components form a connected configuration in
    /// projective space; `None` without components.
    pub discovered_connected: Option<bool>,
}

/// Bracket q_lower <= codim R^i_j <= q_upper from theory, discovery and the
/// random-pencil test.
pub fn codim_report(c: &AomotoComplex, disc: &Discovery, seed: u64) -> Result<CodimReport> {
    let (i, j) = (disc.i, disc.j);
    let theory = TheoryBounds::new(c, i, j);
    let d = c.betti().d() as i64;
    let dim_lower = disc.dim_lower();
    let n = c.n() as i64;
    if dim_lower as i64 > d - n + i as i64 {
        return Err(Error::BoundViolation(format!(
            "component of R^{i}_{j} has dimension {dim_lower} > d - n + i = {}",
            d - n + i as i64
        )));
    }
    let q_upper = (d - 1 - dim_lower as i64).min(theory.upper);
    let pencil = if i >= 1 && (i as i64) <= n - 2 && j <= c.beta(i) && q_upper >= 2 {
        pencil_gcd_degree(c, i, c.beta(i) + 1 - j, seed)?
    } else {
        None
    };
    let mut q_lower = if i == 0 { d - 1 } else { theory.lower };
    if pencil == Some(0) {
        q_lower = q_lower.max(2);
    }
    if q_lower > q_upper {
        return Err(Error::BoundViolation(format!(
            "codim R^{i}_{j}: lower bound {q_lower} exceeds upper bound {q_upper}"
        )));
    }
    let connectivity_hypothesis = theory.eagon < d - 2;
    Ok(CodimReport {
        i,
        j,
        dim_lower,
        q_lower,
        q_upper,
        exact: q_lower == q_upper,
        theory,
        pencil_gcd_degree: pencil,
        connectivity_hypothesis,
        discovered_connected: components_connected(disc),
    })
}

fn components_connected(disc: &Discovery) -> Option<bool> {
    let comps = &disc.components;
    if comps.is_empty() {
        return None;
    }
    let meets = |a: usize, b: usize| {
        let rows: Vec<Vec<Rat>> = comps[a].basis.iter().chain(&comps[b].basis).cloned().collect();
        MatQ::from_rows(rows).rank() < comps[a].dim + comps[b].dim
    };
    let mut reached = vec![false; comps.len()];
    let mut stack = vec![0];
    reached[0] = true;
    while let Some(a) = stack.pop() {
        for b in 0..comps.len() {
            if !reached[b] && meets(a, b) {
                reached[b] = true;
                stack.push(b);
            }
        }
    }
    Some(reached.iter().all(|&r| r))
}

/// Evidence on whether q_(n-2) > 1, read from the codimension report of
/// R^(n-2): a certified component of dimension >= d - 2 contradicts it, a
/// lower bound above 1 (theory or pencil test) supports it.
pub fn codimension_probe(c: &AomotoComplex, rep: &CodimReport) -> Result<CodimensionEvidence> {
    let n = c.n();
    if n < 3 || rep.i != n - 2 || rep.j != 1 {
        return Err(Error::OutOfRange {
            what: "probe degree",
            value: rep.i as i64,
            range: format!("exactly n - 2 = {}", n as i64 - 2),
        });
    }
    let threshold = c.betti().d().saturating_sub(2);
    let largest = rep.dim_lower;
    let (verdict, detail) = if largest >= threshold && largest > 0 {
        (
            ProbeVerdict::Contradicts,
            format!("certified component of dimension {largest} >= d - 2"),
        )
    } else if rep.q_lower > 1 {
        (
            ProbeVerdict::Supports,
            format!(
                "q_{} >= {} (largest discovered component has dimension {largest})",
                n - 2,
                rep.q_lower
            ),
        )
    } else {
        (
            ProbeVerdict::Inconclusive,
            format!("phi_{} may drop rank along a random pencil", n - 2),
        )
    };
    Ok(CodimensionEvidence {
        verdict,
        largest_component_dim: largest,
        codim_one_dim: threshold,
        q_lower: rep.q_lower,
        q_upper: rep.q_upper,
        detail,
    })
}

/// Degree of gcd(det X1 φ_i(u + t w) Y1, det X2 φ_i(u + t w) Y2) for random
/// u, w and random projections X, Y to k x k. Every t at which φ_i drops
/// below rank k is a common root.
fn pencil_gcd_degree(c: &AomotoComplex, i: usize, k: usize, seed: u64) -> Result<Option<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (i as u64) << 16 ^ k as u64);
    let u = small_vector(&mut rng, c.nvars(), 1000);
    let w = small_vector(&mut rng, c.nvars(), 1000);
    let a = c.eval_phi(i, &u)?;
    let b = c.eval_phi(i, &w)?;
    let mut dets = Vec::new();
    for _ in 0..8 {
        let x = random_matrix(&mut rng, k, a.rows());
        let y = random_matrix(&mut rng, a.cols(), k);
        let xa = x.mul(&a)?.mul(&y)?;
        let xb = x.mul(&b)?.mul(&y)?;
        let f = det_polynomial(&xa, &xb)?;
        if f.iter().any(|x| !x.is_zero()) {
            dets.push(f);
            if dets.len() == 2 {
                break;
            }
        }
    }
    if dets.len() < 2 {
        return Ok(None);
    }
    Ok(Some(gcd_degree(&dets[0], &dets[1])))
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> MatQ {
    MatQ::from_rows(
        (0..rows)
            .map(|_| (0..cols).map(|_| Rat::from(rng.gen_range(-100i64..=100))).collect())
            .collect(),
    )
}

/// Coefficients (constant first) of det(A + tB) by interpolation.
fn det_polynomial(a: &MatQ, b: &MatQ) -> Result<Vec<Rat>> {
    let k = a.rows();
    let ts: Vec<Rat> = (0..=k as i64).map(Rat::from).collect();
    let values: Vec<Rat> = ts.iter().map(|t| a.add(&b.scale(t)).det()).collect::<Result<_>>()?;
    let vandermonde = MatQ::from_rows(ts.iter().map(|t| (0..=k as u32).map(|e| t.pow(e)).collect()).collect());
    Ok(vandermonde.solve(&values).expect("Vandermonde system is invertible"))
}

fn trim(p: &[Rat]) -> &[Rat] {
    let len = p.iter().rposition(|x| !x.is_zero()).map_or(0, |i| i + 1);
    &p[..len]
}

/// deg gcd(f, g) = deg f + deg g - rank of the Sylvester matrix.
pub fn gcd_degree(f: &[Rat], g: &[Rat]) -> usize {
    let (f, g) = (trim(f), trim(g));
    let (p, q) = (f.len().saturating_sub(1), g.len().saturating_sub(1));
    if p == 0 || q == 0 {
        return 0;
    }
    let size = p + q;
    let mut rows = Vec::with_capacity(size);
    for (poly, shifts) in [(f, q), (g, p)] {
        for s in 0..shifts {
            let mut row = vec![Rat::zero(); size];
            for (e, x) in poly.iter().enumerate() {
                row[s + e] = x.clone();
            }
            rows.push(row);
        }
    }
    size - MatQ::from_rows(rows).rank()
}
