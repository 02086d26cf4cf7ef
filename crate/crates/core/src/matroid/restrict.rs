//! Restriction to a generic linear subspace.

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{set_of, Arrangement, MatroidData};
use crate::error::{Error, Result};
use crate::linalg::{MatQ, Rat};

pub const DEFAULT_RESTRICTION_RETRIES: usize = 10;

/// Restrict `a` to a seeded random subspace of dimension `s + 1`.
///
/// A sample is accepted only if no hyperplane traces collapse and every
/// subset of at most `s + 1` hyperplanes keeps its rank, i.e. the result
/// realizes the rank-`(s + 1)` truncation of the matroid of `a`. That
/// preserves every flat of rank at most `s`, hence b_0..b_s.
pub fn restrict_generic(a: &Arrangement, s: usize, seed: u64, retries: usize) -> Result<Arrangement> {
    let n = a.n();
    if s == 0 || s + 1 > n {
        return Err(Error::OutOfRange {
            what: "restriction parameter s",
            value: s as i64,
            range: format!("[1, {}]", n.saturating_sub(1)),
        });
    }
    let original = MatroidData::build(a)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..retries.max(1) {
        let basis = MatQ::from_rows(
            (0..n)
                .map(|_| (0..=s).map(|_| Rat::from(rng.gen_range(-1000i64..=1000))).collect())
                .collect(),
        );
        let name = format!("{}|dim{}", a.name(), s + 1);
        let Ok((r, _)) = a.restrict_to_subspace(&basis, name) else {
            continue;
        };
        if r.d() == a.d() && is_truncation(&original, &r, s + 1) {
            return Ok(r);
        }
        log::debug!("restriction attempt {attempt} not generic; retrying");
    }
    Err(Error::GenericityFailure {
        attempts: retries.max(1),
    })
}

fn is_truncation(original: &MatroidData, r: &Arrangement, cap: usize) -> bool {
    (1..=cap.min(original.d())).all(|k| {
        (0..original.d()).combinations(k).all(|c| {
            let m = set_of(&c);
            r.rank_of(m) == original.rank_of(m)
        })
    })
}
