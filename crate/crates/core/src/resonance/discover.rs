//! Certified discovery of linear subspaces contained in R^i_j.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::in_resonance;
use crate::error::{Error, Result};
use crate::linalg::{MatQ, Rat};
use crate::matroid::elements;
use crate::os::AomotoComplex;
use crate::sample::{random_combination, random_vector};

pub const DEFAULT_SPAN_POINTS: usize = 25;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// Zero-sum vectors on a rank-2 flat with at least three hyperplanes.
    Flat,
    /// A point of a component one degree lower.
    Propagation,
    /// Supplied by the caller.
    User,
    /// Random ambient points; the whole space.
    Closure,
}

/// How a component was certified. Line tests are exact; span containment is
/// probabilistic with failure probability at most 2^failure_log2_bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub line_points: usize,
    pub span_points: usize,
    pub failure_log2_bound: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearComponent {
    /// Reduced row echelon basis.
    pub basis: Vec<Vec<Rat>>,
    pub dim: usize,
    pub seed_provenance: Provenance,
    pub certificate: Certificate,
}

impl LinearComponent {
    pub fn contains(&self, v: &[Rat]) -> bool {
        in_span(&self.basis, v)
    }

    pub fn contains_component(&self, other: &LinearComponent) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Discovery {
    pub i: usize,
    pub j: usize,
    pub components: Vec<LinearComponent>,
    pub seeds_tried: usize,
    pub seeds_rejected: usize,
    pub span_points: usize,
    pub rng_seed: u64,
}

impl Discovery {
    pub fn dim_lower(&self) -> usize {
        self.components.iter().map(|c| c.dim).max().unwrap_or(0)
    }
}

fn in_span(basis: &[Vec<Rat>], v: &[Rat]) -> bool {
    if v.iter().all(Rat::is_zero) {
        return true;
    }
    if basis.is_empty() {
        return false;
    }
    let r = MatQ::from_rows(basis.to_vec()).rank();
    let mut rows = basis.to_vec();
    rows.push(v.to_vec());
    MatQ::from_rows(rows).rank() == r
}

fn echelon(rows: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let (rref, pivots) = MatQ::from_rows(rows.to_vec()).rref();
    (0..pivots.len()).map(|r| rref.row(r).to_vec()).collect()
}

fn ceil_log2(x: usize) -> i64 {
    (usize::BITS - x.saturating_sub(1).leading_zeros()) as i64
}

struct Tester<'a> {
    c: &'a AomotoComplex,
    i: usize,
    j: usize,
    degree: usize,
    span_points: usize,
}

impl Tester<'_> {
    fn member(&self, v: &[Rat]) -> Result<bool> {
        in_resonance(self.c, self.i, self.j, v)
    }

    /// Exact test that the line {base + t w} lies in R^i_j: membership is a
    /// polynomial condition of degree at most `degree` along the line.
    fn line(&self, base: &[Rat], w: &[Rat]) -> Result<bool> {
        for t in 1..=self.degree as i64 + 1 {
            let p: Vec<Rat> = base.iter().zip(w).map(|(b, x)| b + &(x * &Rat::from(t))).collect();
            if !self.member(&p)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn span(&self, basis: &[Vec<Rat>], rng: &mut ChaCha8Rng) -> Result<bool> {
        let len = self.c.nvars();
        let base = random_combination(rng, &basis[..basis.len() - 1], len);
        if !self.line(&base, &basis[basis.len() - 1])? {
            return Ok(false);
        }
        for _ in 0..self.span_points {
            if !self.member(&random_combination(rng, basis, len))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn certificate(&self) -> Certificate {
        Certificate {
            line_points: self.degree + 1,
            span_points: self.span_points,
            failure_log2_bound: -(self.span_points as i64) * (64 - ceil_log2(self.degree)),
        }
    }
}

fn unit(k: usize, len: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); len];
    v[k] = Rat::one();
    v
}

/// Zero-sum vectors supported on each rank-2 flat with at least three
/// hyperplanes, in the coordinates of the basis e_k - e_d.
pub fn local_spaces(c: &AomotoComplex) -> Vec<Vec<Vec<Rat>>> {
    let m = c.model.os.matroid();
    let d = m.d();
    let Some(flats) = m.flats.get(2) else {
        return Vec::new();
    };
    flats
        .iter()
        .filter(|f| f.count_ones() >= 3)
        .map(|&f| {
            let hyps = elements(f);
            if hyps.contains(&(d - 1)) {
                hyps[..hyps.len() - 1].iter().map(|&k| unit(k, d - 1)).collect()
            } else {
                hyps[1..]
                    .iter()
                    .map(|&k| {
                        let mut v = unit(k, d - 1);
                        v[hyps[0]] = Rat::from(-1);
                        v
                    })
                    .collect()
            }
        })
        .collect()
}

/// Find linear subspaces inside R^i_j by seeded greedy closure.
///
/// Seeds: local flat spaces (i = 1), random points of `previous` components
/// (the R^(i-1) discovery), and `extra_seeds`. A seed in R^i_j grows by
/// adjoining candidate directions (hint vectors, ker(v ∧ ·) on H^1, unit
/// vectors) whenever the enlarged span passes an exact line test and
/// `span_points` random-point tests. If random ambient points are members,
/// the whole space is returned.
pub fn discover(
    c: &AomotoComplex,
    i: usize,
    j: usize,
    extra_seeds: &[Vec<Rat>],
    previous: &[LinearComponent],
    span_points: usize,
    seed: u64,
) -> Result<Discovery> {
    let n = c.n();
    if i >= n {
        return Err(Error::OutOfRange {
            what: "degree i",
            value: i as i64,
            range: format!("[0, {}]", n - 1),
        });
    }
    if j == 0 || j > c.b(i) {
        return Err(Error::OutOfRange {
            what: "depth j",
            value: j as i64,
            range: format!("[1, {}]", c.b(i)),
        });
    }
    for s in extra_seeds {
        if s.len() != c.nvars() {
            return Err(Error::DimensionMismatch {
                expected: c.nvars(),
                found: s.len(),
                context: "user seed vector".into(),
            });
        }
    }
    let len = c.nvars();
    let tester = Tester {
        c,
        i,
        j,
        degree: c.b(i) + 1 - j,
        span_points,
    };
    let rng_seed = seed ^ ((i as u64) << 32 | j as u64);
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut out = Discovery {
        i,
        j,
        components: Vec::new(),
        seeds_tried: 0,
        seeds_rejected: 0,
        span_points,
        rng_seed,
    };
    if i == 0 || len == 0 {
        // φ_0 = (x_1, ..., x_b1)^t is injective away from 0, so R^0 = {0}.
        return Ok(out);
    }

    let whole: Vec<Vec<Rat>> = (0..len).map(|k| unit(k, len)).collect();
    if tester.span(&whole, &mut rng)? {
        out.components.push(LinearComponent {
            basis: whole,
            dim: len,
            seed_provenance: Provenance::Closure,
            certificate: tester.certificate(),
        });
        return Ok(out);
    }

    let mut seeds: Vec<(Vec<Rat>, Provenance, Vec<Vec<Rat>>)> = Vec::new();
    if i == 1 {
        for space in local_spaces(c) {
            seeds.push((random_combination(&mut rng, &space, len), Provenance::Flat, space));
        }
    }
    for comp in previous {
        seeds.push((
            random_combination(&mut rng, &comp.basis, len),
            Provenance::Propagation,
            comp.basis.clone(),
        ));
    }
    for s in extra_seeds {
        seeds.push((s.clone(), Provenance::User, Vec::new()));
    }

    for (v, provenance, hints) in seeds {
        out.seeds_tried += 1;
        if v.iter().all(Rat::is_zero) || !tester.member(&v)? {
            out.seeds_rejected += 1;
            continue;
        }
        if out.components.iter().any(|comp| comp.contains(&v)) {
            continue;
        }
        let mut span = vec![v.clone()];
        let mut candidates = hints;
        if n >= 3 {
            candidates.extend(c.eval_phi(1, &v)?.rank_and_nullspace().basis);
        }
        candidates.extend(whole.iter().cloned());
        for w in candidates {
            if in_span(&span, &w) {
                continue;
            }
            span.push(w);
            if !tester.span(&span, &mut rng)? {
                span.pop();
            }
        }
        let basis = echelon(&span);
        for b in &basis {
            if !tester.member(b)? {
                return Err(Error::Consistency("component basis vector failed membership".into()));
            }
        }
        out.components.push(LinearComponent {
            dim: basis.len(),
            basis,
            seed_provenance: provenance,
            certificate: tester.certificate(),
        });
    }

    // Drop components contained in others, then order canonically.
    let comps = std::mem::take(&mut out.components);
    let mut kept: Vec<LinearComponent> = Vec::new();
    for comp in comps {
        if kept.iter().any(|k| k.contains_component(&comp)) {
            continue;
        }
        kept.retain(|k| !comp.contains_component(k));
        kept.push(comp);
    }
    kept.sort_by(|a, b| b.dim.cmp(&a.dim).then_with(|| b.basis.cmp(&a.basis)));
    out.components = kept;
    Ok(out)
}

/// A seeded random point of `comp`.
pub fn sample_component(comp: &LinearComponent, rng: &mut ChaCha8Rng) -> Vec<Rat> {
    let len = comp.basis.first().map_or(0, Vec::len);
    random_combination(rng, &comp.basis, len)
}

/// A seeded random point of the ambient space H^1(U).
pub fn sample_ambient(c: &AomotoComplex, rng: &mut ChaCha8Rng) -> Vec<Rat> {
    random_vector(rng, c.nvars())
}
