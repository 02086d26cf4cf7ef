//! Explicit φ_1 for a line arrangement with at most triple points.

use crate::error::{Error, Result};
use crate::linalg::{MPoly, MatPoly};
use crate::matroid::{elements, Arrangement, MatroidData};

/// The b_2 x b_1 matrix of φ_1 for the cone over a line arrangement whose
/// points have multiplicity at most three, in variables x_1..x_(d-1).
///
/// Rows are indexed by pairs (i, i_P), i < i_P, over the intersection points
/// P not on the last line, where i_P is the largest line through P. A double
/// point gives entries -x_(i_P) at i and x_i at i_P; a triple point
/// {i, k, i_P} gives x_i at i_P, -x_(i_P) - x_k at i, and x_i at k. Rows are
/// sorted by (i, i_P).
pub fn triple_point_matrix(a: &Arrangement) -> Result<MatPoly> {
    build(a, false)
}

fn build(a: &Arrangement, printed_k_entry: bool) -> Result<MatPoly> {
    if a.n() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            found: a.n(),
            context: "triple-point matrix needs a line arrangement".into(),
        });
    }
    let m = MatroidData::build(a)?;
    let d = m.d();
    let last = d - 1;
    let nv = d - 1;
    let x = |k: usize| MPoly::var(k, nv);
    let mut rows: Vec<((usize, usize), Vec<MPoly>)> = Vec::new();
    for &flat in m.flats.get(2).map_or(&[][..], Vec::as_slice) {
        let lines = elements(flat);
        if lines.len() > 3 {
            return Err(Error::MultiplicityTooHigh {
                flat: lines.iter().map(|l| l + 1).collect(),
                multiplicity: lines.len(),
            });
        }
        if flat >> last & 1 == 1 {
            continue;
        }
        let ip = *lines.last().expect("flat has lines");
        for &i in &lines[..lines.len() - 1] {
            let mut row = vec![MPoly::zero(nv); nv];
            if lines.len() == 2 {
                row[i] = -&x(ip);
                row[ip] = x(i);
            } else {
                let k = *lines[..2].iter().find(|&&l| l != i).expect("third line");
                row[ip] = x(i);
                row[i] = &(-&x(ip)) - &x(k);
                row[k] = if printed_k_entry { &x(i) - &x(ip) } else { x(i) };
            }
            rows.push(((i, ip), row));
        }
    }
    rows.sort_by_key(|(key, _)| *key);
    Ok(MatPoly::from_rows(nv, rows.into_iter().map(|(_, r)| r).collect()))
}
