use num_bigint::BigInt;
use serde::Serialize;

use super::binom;
use crate::error::{Error, Result};
use crate::linalg::{MPoly, Rat};
use crate::matroid::BettiTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum QProvenance {
    Exact,
    TheoryLowerBound,
    Discovery,
}

/// c^(j)_0 .. c^(j)_(q_used - 1).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChernSeries {
    pub j: usize,
    pub q_used: usize,
    pub q_provenance: QProvenance,
    pub coeffs: Vec<Rat>,
}

impl ChernSeries {
    /// c_k, zero at negative k and at or beyond the truncation.
    pub fn c(&self, k: i64) -> Rat {
        if k < 0 {
            Rat::zero()
        } else {
            self.coeffs.get(k as usize).cloned().unwrap_or_else(Rat::zero)
        }
    }
}

/// First `len` coefficients of Π_(k=1..j+1) (1 - kt)^((-1)^k b_(j+1-k)).
pub fn chern_coefficients(b: &BettiTable, j: usize, len: usize) -> Result<Vec<Rat>> {
    check_j(b, j)?;
    let mut acc = vec![BigInt::from(0); len];
    if len > 0 {
        acc[0] = BigInt::from(1);
    }
    for k in 1..=j as i64 + 1 {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let e = sign * b.b(j as i64 + 1 - k);
        let factor = binomial_series(k, e, len);
        acc = truncated_product(&acc, &factor, len);
    }
    Ok(acc.into_iter().map(Rat::from).collect())
}

/// (1 - kt)^e up to t^(len-1).
fn binomial_series(k: i64, e: i64, len: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(len);
    let mut coeff = BigInt::from(1);
    for m in 0..len as i64 {
        out.push(coeff.clone());
        // c_(m+1) = c_m * (e - m) / (m + 1) * (-k)
        coeff = coeff * BigInt::from(e - m) * BigInt::from(-k) / BigInt::from(m + 1);
    }
    out
}

fn truncated_product(a: &[BigInt], b: &[BigInt], len: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(0); len];
    for (s, x) in a.iter().enumerate() {
        if x == &BigInt::from(0) {
            continue;
        }
        for (t, y) in b.iter().enumerate().take(len - s) {
            out[s + t] += x * y;
        }
    }
    out
}

fn check_j(b: &BettiTable, j: usize) -> Result<()> {
    let n = b.n();
    if j >= n {
        return Err(Error::OutOfRange {
            what: "degree j",
            value: j as i64,
            range: format!("[0, {}]", n as i64 - 1),
        });
    }
    Ok(())
}

/// c_1^(j) computed from the β, b and h sequences:
/// Σ (-1)^k β_(j-k), Σ (-1)^k (k+1) b_(j-k), Σ (-1)^k C(k+2, 2) h_(j-k).
pub fn c1_routes(b: &BettiTable, j: usize) -> [i64; 3] {
    let j = j as i64;
    let sign = |k: i64| if k % 2 == 0 { 1 } else { -1 };
    let beta = (0..=j).map(|k| sign(k) * b.beta(j - k)).sum();
    let bb = (0..=j).map(|k| sign(k) * (k + 1) * b.b(j - k)).sum();
    let h = (0..=j).map(|k| sign(k) * binom(k + 2, 2) * b.h(j - k)).sum();
    [beta, bb, h]
}

/// Truncated Chern series, checking c_1 against all three closed forms.
pub fn chern_series(b: &BettiTable, j: usize, q_used: usize, q_provenance: QProvenance) -> Result<ChernSeries> {
    if q_used == 0 {
        return Err(Error::OutOfRange {
            what: "truncation q",
            value: 0,
            range: ">= 1".into(),
        });
    }
    let full = chern_coefficients(b, j, 2)?;
    let routes = c1_routes(b, j);
    if routes.iter().any(|&r| Rat::from(r) != full[1]) {
        return Err(Error::Consistency(format!(
            "c_1^({j}) disagrees: series {} vs closed forms {routes:?}",
            full[1]
        )));
    }
    Ok(ChernSeries {
        j,
        q_used,
        q_provenance,
        coeffs: chern_coefficients(b, j, q_used)?,
    })
}

/// The first `len` coefficients of c^(j)_t as polynomials in b_0..b_j
/// (variable k is b_k).
pub fn symbolic_chern(j: usize, len: usize) -> Vec<MPoly> {
    let nv = j + 1;
    let mut acc: Vec<MPoly> = (0..len)
        .map(|m| MPoly::constant(if m == 0 { Rat::one() } else { Rat::zero() }, nv))
        .collect();
    for k in 1..=j + 1 {
        let var = MPoly::var(j + 1 - k, nv);
        let e = if k % 2 == 0 { var } else { -&var };
        let mut factor = Vec::with_capacity(len);
        let mut coeff = MPoly::constant(Rat::one(), nv);
        for m in 0..len {
            factor.push(coeff.clone());
            let step = &e - &MPoly::constant(Rat::from(m as i64), nv);
            coeff = (&coeff * &step).scale(&Rat::new(-(k as i64), m as i64 + 1));
        }
        let mut next: Vec<MPoly> = (0..len).map(|_| MPoly::zero(nv)).collect();
        for (s, x) in acc.iter().enumerate() {
            for (t, y) in factor.iter().enumerate().take(len - s) {
                next[s + t] = &next[s + t] + &(x * y);
            }
        }
        acc = next;
    }
    acc
}

/// a_i = c_1^(i) = Σ_k (-1)^(k+1) k b_(i+1-k), as a linear form in b_0..b_(nvars-1).
pub fn symbolic_c1(i: usize, nvars: usize) -> MPoly {
    let mut coeffs = vec![Rat::zero(); nvars];
    for k in 1..=i + 1 {
        let sign = if k % 2 == 0 { -1 } else { 1 };
        coeffs[i + 1 - k] = Rat::from(sign * k as i64);
    }
    MPoly::linear(&coeffs)
}
