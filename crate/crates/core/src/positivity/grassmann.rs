use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::QBracket;
use crate::error::{Error, Result};
use crate::linalg::rat::vector_to_strings;
use crate::linalg::{MatQ, Rat};
use crate::os::AomotoComplex;
use crate::resonance::{dim_at, ProbeVerdict};
use crate::sample::{random_combination, random_vector};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrassmannReport {
    pub i: usize,
    /// q_0 + .. + q_(i-1) at the lower and upper ends of the brackets.
    pub q_sum_lower: i64,
    pub q_sum_upper: i64,
    /// b_i + i(i+1)/2.
    pub bound: i64,
    /// Evidence from the count alone, which presumes injectivity of Σ_i.
    pub count_verdict: ProbeVerdict,
    /// Dimensions of the nested subspaces W_0 ⊃ .. ⊃ W_(i-1).
    pub w_dims: Vec<usize>,
    pub trials: usize,
    pub rejected_samples: usize,
    pub vanishing: usize,
    pub witness: Option<Vec<Vec<String>>>,
    /// Supports: no sampled product vanished.
    pub verdict: ProbeVerdict,
}

/// v_i ∧ .. ∧ v_1 in H^i(U), by iterated multiplication from 1 ∈ H^0(U).
/// Rejects linearly dependent tuples.
pub fn sigma_image(c: &AomotoComplex, vs: &[Vec<Rat>]) -> Result<Vec<Rat>> {
    if vs.is_empty() || vs.len() >= c.n() + 1 {
        return Err(Error::OutOfRange {
            what: "tuple length",
            value: vs.len() as i64,
            range: format!("[1, {}]", c.n()),
        });
    }
    if MatQ::from_rows(vs.to_vec()).rank() < vs.len() {
        return Err(Error::DegenerateSample("vectors do not span an i-plane".into()));
    }
    let mut w = vec![Rat::one()];
    for (k, v) in vs.iter().enumerate() {
        w = c.eval_phi(k, v)?.mul_vec(&w)?;
    }
    Ok(w)
}

/// Check q_0 + .. + q_(i-1) < b_i + i(i+1)/2 and sample products
/// v_1 .. v_i with v_(k+1) in a random W_k of dimension q_k, each transversal
/// to R^k at the sample.
pub fn grassmann_probe(
    c: &AomotoComplex,
    q: &[QBracket],
    i: usize,
    trials: usize,
    seed: u64,
) -> Result<GrassmannReport> {
    let n = c.n();
    if i == 0 || i >= n || q.len() < i {
        return Err(Error::OutOfRange {
            what: "degree i",
            value: i as i64,
            range: format!("[1, {}] with q known below i", n as i64 - 1),
        });
    }
    let q_sum_lower: i64 = q[..i].iter().map(|b| b.lower).sum();
    let q_sum_upper: i64 = q[..i].iter().map(|b| b.upper).sum();
    let ii = i as i64;
    let bound = c.b(i) as i64 + ii * (ii + 1) / 2;
    let count_verdict = if q_sum_upper < bound {
        ProbeVerdict::Supports
    } else if q_sum_lower >= bound {
        ProbeVerdict::Contradicts
    } else {
        ProbeVerdict::Inconclusive
    };

    let dim = c.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut w_dims = Vec::with_capacity(i);
    for (k, b) in q[..i].iter().enumerate() {
        let prev = if k == 0 { dim } else { w_dims[k - 1] };
        w_dims.push((b.upper.max(1) as usize).min(prev));
    }
    let frame: Vec<Vec<Rat>> = (0..dim).map(|_| random_vector(&mut rng, dim)).collect();

    let budget = trials * 10 + 10;
    let (mut done, mut rejected, mut vanishing, mut witness) = (0, 0, 0, None);
    while done < trials {
        if rejected > budget {
            return Err(Error::DegenerateSample(format!(
                "{rejected} rejected tuples for the degree-{i} probe"
            )));
        }
        let vs: Vec<Vec<Rat>> = w_dims
            .iter()
            .map(|&w| random_combination(&mut rng, &frame[..w], dim))
            .collect();
        let mut transversal = true;
        for (k, v) in vs.iter().enumerate().skip(1) {
            if dim_at(c, k, v)? > 0 {
                transversal = false;
                break;
            }
        }
        if !transversal {
            rejected += 1;
            continue;
        }
        let image = match sigma_image(c, &vs) {
            Err(Error::DegenerateSample(_)) => {
                rejected += 1;
                continue;
            }
            other => other?,
        };
        done += 1;
        if image.iter().all(Rat::is_zero) {
            vanishing += 1;
            witness.get_or_insert_with(|| vs.iter().map(|v| vector_to_strings(v)).collect());
        }
    }
    let verdict = if vanishing == 0 {
        ProbeVerdict::Supports
    } else {
        ProbeVerdict::Contradicts
    };
    Ok(GrassmannReport {
        i,
        q_sum_lower,
        q_sum_upper,
        bound,
        count_verdict,
        w_dims,
        trials,
        rejected_samples: rejected,
        vanishing,
        witness,
        verdict,
    })
}
