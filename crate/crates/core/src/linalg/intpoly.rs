//! Integer polynomials with exponent vectors packed into a `u128`, used to
//! expand minors of integer matrices. Every operation is overflow checked
//! and reports failure with `None`, so callers can fall back to [`MPoly`].

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::mpoly::MPoly;
use super::rat::Rat;

const BITS: usize = 6;
const MAX_VARS: usize = 128 / BITS;
/// Exponents stay below 2^BITS as long as total degrees do.
const MAX_DEGREE: u32 = (1 << BITS) - 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IntPoly {
    /// Sorted by key, no zero coefficients.
    terms: Vec<(u128, i128)>,
    degree: u32,
}

impl IntPoly {
    pub fn one() -> IntPoly {
        IntPoly {
            terms: vec![(0, 1)],
            degree: 0,
        }
    }

    pub fn zero() -> IntPoly {
        IntPoly {
            terms: Vec::new(),
            degree: 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn from_mpoly(p: &MPoly) -> Option<IntPoly> {
        if p.nvars() > MAX_VARS || p.degree().unwrap_or(0) > MAX_DEGREE {
            return None;
        }
        let mut terms = Vec::with_capacity(p.num_terms());
        for (m, c) in p.terms() {
            if !c.is_integer() {
                return None;
            }
            let key =
                m.0.iter()
                    .enumerate()
                    .fold(0u128, |k, (i, &e)| k | (e as u128) << (BITS * i));
            terms.push((key, c.numer().to_i128()?));
        }
        terms.sort_unstable_by_key(|t| t.0);
        Some(IntPoly {
            terms,
            degree: p.degree().unwrap_or(0),
        })
    }

    pub fn to_mpoly(&self, nvars: usize) -> MPoly {
        let mask = (1u128 << BITS) - 1;
        MPoly::from_terms(
            nvars,
            self.terms.iter().map(|&(k, c)| {
                let e = (0..nvars).map(|i| (k >> (BITS * i) & mask) as u32).collect();
                (e, Rat::from(BigInt::from(c)))
            }),
        )
    }

    /// self + a * b, or self - a * b when `negate` is set.
    pub fn add_product(&self, a: &IntPoly, b: &IntPoly, negate: bool) -> Option<IntPoly> {
        if a.is_zero() || b.is_zero() {
            return Some(self.clone());
        }
        let degree = a.degree + b.degree;
        if degree > MAX_DEGREE {
            return None;
        }
        let mut all = Vec::with_capacity(self.terms.len() + a.terms.len() * b.terms.len());
        all.extend_from_slice(&self.terms);
        for &(ka, ca) in &a.terms {
            let ca = if negate { ca.checked_neg()? } else { ca };
            for &(kb, cb) in &b.terms {
                all.push((ka + kb, ca.checked_mul(cb)?));
            }
        }
        all.sort_unstable_by_key(|t| t.0);
        let mut terms: Vec<(u128, i128)> = Vec::with_capacity(all.len());
        for (k, c) in all {
            match terms.last_mut() {
                Some(last) if last.0 == k => last.1 = last.1.checked_add(c)?,
                _ => terms.push((k, c)),
            }
        }
        terms.retain(|t| t.1 != 0);
        let degree = if terms.is_empty() { 0 } else { degree.max(self.degree) };
        Some(IntPoly { terms, degree })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_product() {
        let x = MPoly::var(0, 3);
        let y = MPoly::var(2, 3);
        let p = &(&x + &y) * &(&x - &y);
        let a = IntPoly::from_mpoly(&(&x + &y)).unwrap();
        let b = IntPoly::from_mpoly(&(&x - &y)).unwrap();
        let got = IntPoly::zero().add_product(&a, &b, false).unwrap();
        assert_eq!(got.to_mpoly(3), p);
        let back = got.add_product(&a, &b, true).unwrap();
        assert!(back.is_zero());
    }

    #[test]
    fn rejects_fractions_and_overflow() {
        let half = MPoly::constant(Rat::new(1, 2), 2);
        assert!(IntPoly::from_mpoly(&half).is_none());
        let big = IntPoly::from_mpoly(&MPoly::constant(Rat::from(i64::MAX), 1)).unwrap();
        let sq = IntPoly::zero().add_product(&big, &big, false).unwrap();
        assert!(IntPoly::zero().add_product(&sq, &sq, false).is_none());
    }
}
