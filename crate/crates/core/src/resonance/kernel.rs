use crate::error::{Error, Result};
use crate::linalg::{MatQ, Rat};

/// Nullspace of `mv` (a p-column evaluation of φ_1 at a point of
/// R^1_j \ R^1_(j+1)) built from signed maximal minors.
///
/// Picks p - j - 1 independent rows N with an invertible block N_0 and, for
/// each column f outside N_0, expands the determinant of the symbolic row
/// (e_1 .. e_p) stacked on N restricted to the columns of N_0 plus f.
pub fn kernel_basis(mv: &MatQ, j: usize) -> Result<Vec<Vec<Rat>>> {
    let p = mv.cols();
    let expected = p.checked_sub(j + 1).ok_or(Error::OutOfRange {
        what: "depth j",
        value: j as i64,
        range: format!("[0, {}]", p as i64 - 1),
    })?;
    let (_, rows) = mv.transpose().rref();
    if rows.len() != expected {
        return Err(Error::RankMismatch {
            expected,
            found: rows.len(),
        });
    }
    let n = mv.submatrix(&rows, &(0..p).collect::<Vec<_>>());
    let (_, block) = n.rref();
    let all_rows: Vec<usize> = (0..n.rows()).collect();
    let vectors = (0..p)
        .filter(|c| !block.contains(c))
        .map(|f| {
            let mut cols = block.clone();
            cols.push(f);
            cols.sort_unstable();
            let mut b = vec![Rat::zero(); p];
            for (t, &c) in cols.iter().enumerate() {
                let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let minor = n.submatrix(&all_rows, &rest).det().expect("square block");
                b[c] = if t % 2 == 0 { minor } else { -minor };
            }
            b
        })
        .collect();
    Ok(vectors)
}
