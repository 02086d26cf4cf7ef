use serde::Serialize;

use super::binom;
use crate::error::{Error, Result};
use crate::matroid::BettiTable;

/// Closed forms for d generic hyperplanes in C^n.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenericOracle {
    pub betti: BettiTable,
    /// c_1^(j) = C(d-3, j) for j = 0..n-1.
    pub c1: Vec<i64>,
    /// q_i = codim R^i: d - 1 for i < n - 1 (R^i = {0}), 0 for i = n - 1.
    pub q: Vec<i64>,
}

pub fn generic_oracle(d: usize, n: usize) -> Result<GenericOracle> {
    if n == 0 || d <= n {
        return Err(Error::OutOfRange {
            what: "number of hyperplanes d",
            value: d as i64,
            range: format!("> n = {n}"),
        });
    }
    let (d, n) = (d as i64, n as i64);
    let mut h: Vec<i64> = (0..n).map(|i| binom(d, i)).collect();
    h.push(binom(d - 1, n - 1));
    let betti = BettiTable::from_h(h);
    let c1 = (0..n).map(|j| binom(d - 3, j)).collect();
    let q = (0..n).map(|i| if i + 1 < n { d - 1 } else { 0 }).collect();
    Ok(GenericOracle { betti, c1, q })
}
