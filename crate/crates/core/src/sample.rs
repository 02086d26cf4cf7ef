//! Seeded random rational samples.

use rand::Rng;

use crate::linalg::Rat;

/// Vector with uniformly random 64-bit integer entries.
pub fn random_vector<R: Rng>(rng: &mut R, len: usize) -> Vec<Rat> {
    (0..len).map(|_| Rat::from(rng.gen::<i64>())).collect()
}

/// Vector with small random integer entries in `[-bound, bound]`.
pub fn small_vector<R: Rng>(rng: &mut R, len: usize, bound: i64) -> Vec<Rat> {
    (0..len).map(|_| Rat::from(rng.gen_range(-bound..=bound))).collect()
}

/// Random element of the span of `basis`, with 64-bit coefficients.
pub fn random_combination<R: Rng>(rng: &mut R, basis: &[Vec<Rat>], len: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); len];
    for b in basis {
        let c = Rat::from(rng.gen::<i64>());
        for (o, x) in out.iter_mut().zip(b) {
            *o = &*o + &(&c * x);
        }
    }
    out
}
