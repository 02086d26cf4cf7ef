use serde::Serialize;

use super::chern::ChernSeries;
use crate::error::{Error, Result};
use crate::linalg::{MPoly, MatPoly, MatQ, Rat};

/// Partitions of w, parts non-increasing, in reverse lexicographic order.
pub fn partitions(w: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if w > 0 {
        go(w, w, &mut Vec::new(), &mut out);
    }
    out
}

fn jt_index(lambda: &[usize], a: usize, b: usize) -> i64 {
    lambda[a] as i64 + b as i64 - a as i64
}

/// det(c_(λ_a + b - a)) as a polynomial in c_1..c_nvars (variable k-1 is
/// c_k), with c_0 = 1 and c_k = 0 for k < 0 or k > nvars.
pub fn schur_polynomial(lambda: &[usize], nvars: usize) -> Result<MPoly> {
    let l = lambda.len();
    let rows = (0..l)
        .map(|a| {
            (0..l)
                .map(|b| match jt_index(lambda, a, b) {
                    0 => MPoly::constant(Rat::one(), nvars),
                    k if k < 0 || k as usize > nvars => MPoly::zero(nvars),
                    k => MPoly::var(k as usize - 1, nvars),
                })
                .collect()
        })
        .collect();
    MatPoly::from_rows(nvars, rows).det()
}

/// The Jacobi–Trudi determinant evaluated at the coefficients of `cs`.
pub fn schur_value(lambda: &[usize], cs: &ChernSeries) -> Result<Rat> {
    let l = lambda.len();
    if l == 0 {
        return Ok(Rat::one());
    }
    let rows = (0..l)
        .map(|a| (0..l).map(|b| cs.c(jt_index(lambda, a, b))).collect())
        .collect();
    MatQ::from_rows(rows).det()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SchurValue {
    pub partition: Vec<usize>,
    pub value: Rat,
}

/// Schur values of every partition of weight 1..=max_weight.
pub fn schur_values(cs: &ChernSeries, max_weight: usize) -> Result<Vec<SchurValue>> {
    if max_weight >= cs.q_used {
        return Err(Error::OutOfRange {
            what: "Schur weight",
            value: max_weight as i64,
            range: format!("[0, {}]", cs.q_used as i64 - 1),
        });
    }
    let mut out = Vec::new();
    for w in 1..=max_weight {
        for lambda in partitions(w) {
            let value = schur_value(&lambda, cs)?;
            out.push(SchurValue {
                partition: lambda,
                value,
            });
        }
    }
    Ok(out)
}
