use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::discover::{sample_component, LinearComponent};
use super::membership;
use crate::error::{Error, Result};
use crate::linalg::rat::vector_to_strings;
use crate::os::AomotoComplex;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropagationCheck {
    /// Degree of the source component, R^i.
    pub i: usize,
    pub component: usize,
    /// Largest j with R^i ⊂ R^(i+1)_j checked.
    pub max_j: usize,
    pub samples: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PropagationReport {
    pub checks: Vec<PropagationCheck>,
    pub skipped: Vec<String>,
}

/// Largest j for which R^i ⊂ R^(i+1)_j is asserted: 2 for i <= n-2, and
/// 1 + floor((n-3)/(i+1)) as well when i < n-2.
pub fn propagation_depth(n: usize, i: usize) -> usize {
    let mut j = 2;
    if i + 2 < n {
        j = j.max(1 + (n - 3) / (i + 1));
    }
    j
}

/// Sample points of every discovered component of R^i (`by_degree[i]`) and
/// check they lie in R^(i+1) and R^(i+1)_j for the asserted depths.
pub fn propagation_check(
    c: &AomotoComplex,
    by_degree: &[Vec<LinearComponent>],
    samples: usize,
    seed: u64,
) -> Result<PropagationReport> {
    let n = c.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = PropagationReport::default();
    for (i, comps) in by_degree.iter().enumerate() {
        if i + 2 > n {
            continue;
        }
        if comps.is_empty() {
            report.skipped.push(format!("R^{i}: no discovered components"));
            continue;
        }
        let max_j = propagation_depth(n, i);
        for (k, comp) in comps.iter().enumerate() {
            for _ in 0..samples {
                let v = sample_component(comp, &mut rng);
                let m = membership(c, &v)?;
                if !m.in_resonance(i, 1) {
                    return Err(Error::Consistency(format!(
                        "sample of component {k} of R^{i} is not in R^{i}"
                    )));
                }
                if !m.in_resonance(i + 1, max_j) {
                    return Err(Error::ViolationFound {
                        witness: vector_to_strings(&v),
                        detail: format!("dim H^{} = {} < {max_j} at a point of R^{i}", i + 1, m.dims[i + 1]),
                    });
                }
            }
            report.checks.push(PropagationCheck {
                i,
                component: k,
                max_j,
                samples,
            });
        }
    }
    Ok(report)
}
