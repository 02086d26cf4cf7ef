use std::collections::HashMap;

use itertools::Itertools;
use serde::Serialize;

use super::intpoly::IntPoly;
use super::matq::MatQ;
use super::mpoly::MPoly;
use super::rat::Rat;
use crate::error::{Error, Result};
use crate::par;

/// Matrix whose entries are polynomials in a common set of variables. In
/// this crate every instance carries linear forms (or zeros).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatPoly {
    rows: usize,
    cols: usize,
    nvars: usize,
    data: Vec<MPoly>,
}

/// A k-minor together with the row and column sets it was taken from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Minor {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub poly: MPoly,
}

impl MatPoly {
    pub fn zeros(rows: usize, cols: usize, nvars: usize) -> MatPoly {
        MatPoly {
            rows,
            cols,
            nvars,
            data: vec![MPoly::zero(nvars); rows * cols],
        }
    }

    pub fn from_rows(nvars: usize, rows: Vec<Vec<MPoly>>) -> MatPoly {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let data: Vec<MPoly> = rows.into_iter().flatten().collect();
        assert!(data.iter().all(|p| p.nvars() == nvars));
        MatPoly {
            rows: r,
            cols: c,
            nvars,
            data,
        }
    }

    /// `sum_k x_{k+1} * coeffs[k]` for equally shaped constant matrices.
    pub fn from_linear_pencil(coeffs: &[MatQ]) -> MatPoly {
        let nvars = coeffs.len();
        let (rows, cols) = coeffs.first().map_or((0, 0), |m| (m.rows(), m.cols()));
        let mut out = MatPoly::zeros(rows, cols, nvars);
        for i in 0..rows {
            for j in 0..cols {
                let lin: Vec<Rat> = coeffs.iter().map(|m| m.get(i, j).clone()).collect();
                out.data[i * cols + j] = MPoly::linear(&lin);
            }
        }
        out
    }

    /// Constant matrix viewed as polynomials of degree 0.
    pub fn from_constant(m: &MatQ, nvars: usize) -> MatPoly {
        MatPoly::from_rows(
            nvars,
            m.to_rows()
                .into_iter()
                .map(|r| r.into_iter().map(|c| MPoly::constant(c, nvars)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, i: usize, j: usize) -> &MPoly {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: MPoly) {
        assert_eq!(p.nvars(), self.nvars);
        self.data[i * self.cols + j] = p;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(MPoly::is_zero)
    }

    /// Every nonzero entry is homogeneous of degree exactly one.
    pub fn is_linear(&self) -> bool {
        self.data
            .iter()
            .all(|p| p.is_zero() || (p.is_homogeneous() && p.degree() == Some(1)))
    }

    pub fn transpose(&self) -> MatPoly {
        let mut t = MatPoly::zeros(self.cols, self.rows, self.nvars);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn remove_col(&self, col: usize) -> MatPoly {
        let keep: Vec<usize> = (0..self.cols).filter(|&j| j != col).collect();
        self.submatrix(&(0..self.rows).collect::<Vec<_>>(), &keep)
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> MatPoly {
        MatPoly::from_rows(
            self.nvars,
            rows.iter()
                .map(|&i| cols.iter().map(|&j| self.get(i, j).clone()).collect())
                .collect(),
        )
    }

    pub fn mul(&self, rhs: &MatPoly) -> Result<MatPoly> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
                context: "polynomial matrix product".into(),
            });
        }
        let mut out = MatPoly::zeros(self.rows, rhs.cols, self.nvars);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = MPoly::zero(self.nvars);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), rhs.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Entrywise evaluation at a rational point.
    pub fn eval(&self, point: &[Rat]) -> Result<MatQ> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: point.len(),
                context: "matrix evaluation point".into(),
            });
        }
        let mut out = MatQ::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).eval(point)?);
            }
        }
        Ok(out)
    }

    /// Exact determinant by cofactor expansion with memoized sub-minors.
    pub fn det(&self) -> Result<MPoly> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let rows: Vec<usize> = (0..self.rows).collect();
        if let Some(ints) = self.int_entries() {
            if let Some(p) = self.int_minor_rec(&ints, &rows, full_mask(self.cols), &mut HashMap::new()) {
                return Ok(p.to_mpoly(self.nvars));
            }
        }
        let mut memo = HashMap::new();
        Ok(self.minor_rec(&rows, full_mask(self.cols), &mut memo))
    }

    /// All k-minors, row sets and column sets both in lexicographic order.
    pub fn minors(&self, k: usize) -> Result<Vec<Minor>> {
        let limit = self.rows.min(self.cols);
        if k == 0 || k > limit {
            return Err(Error::OutOfRange {
                what: "minor size",
                value: k as i64,
                range: format!("[1, {limit}]"),
            });
        }
        let row_sets: Vec<Vec<usize>> = (0..self.rows).combinations(k).collect();
        let col_sets: Vec<Vec<usize>> = (0..self.cols).combinations(k).collect();
        let ints = self.int_entries();
        let per_row = par::map(&row_sets, |rows| {
            if let Some(ints) = &ints {
                let mut memo = HashMap::new();
                let fast: Option<Vec<Minor>> = col_sets
                    .iter()
                    .map(|cols| {
                        let p = self.int_minor_rec(ints, rows, mask_of(cols), &mut memo)?;
                        Some(Minor {
                            rows: rows.clone(),
                            cols: cols.clone(),
                            poly: p.to_mpoly(self.nvars),
                        })
                    })
                    .collect();
                if let Some(v) = fast {
                    return v;
                }
            }
            let mut memo = HashMap::new();
            col_sets
                .iter()
                .map(|cols| Minor {
                    rows: rows.clone(),
                    cols: cols.clone(),
                    poly: self.minor_rec(rows, mask_of(cols), &mut memo),
                })
                .collect::<Vec<_>>()
        });
        Ok(per_row.into_iter().flatten().collect())
    }

    /// Entries as integer polynomials, if they all have integer coefficients.
    fn int_entries(&self) -> Option<Vec<IntPoly>> {
        self.data.iter().map(IntPoly::from_mpoly).collect()
    }

    /// [`Self::minor_rec`] over the integers; `None` on overflow.
    fn int_minor_rec(
        &self,
        ints: &[IntPoly],
        rows: &[usize],
        cols: u64,
        memo: &mut HashMap<(usize, u64), IntPoly>,
    ) -> Option<IntPoly> {
        if rows.is_empty() {
            return Some(IntPoly::one());
        }
        let key = (rows.len(), cols);
        if let Some(p) = memo.get(&key) {
            return Some(p.clone());
        }
        let r0 = rows[0];
        let mut acc = IntPoly::zero();
        let mut sign_pos = true;
        for c in (0..self.cols).filter(|c| cols >> c & 1 == 1) {
            let entry = &ints[r0 * self.cols + c];
            if !entry.is_zero() {
                let sub = self.int_minor_rec(ints, &rows[1..], cols & !(1 << c), memo)?;
                acc = acc.add_product(entry, &sub, !sign_pos)?;
            }
            sign_pos = !sign_pos;
        }
        memo.insert(key, acc.clone());
        Some(acc)
    }

    /// Determinant of the submatrix on `rows` (sorted) and the columns in
    /// `cols`; expands along the first row, memoized on (depth, column mask).
    fn minor_rec(&self, rows: &[usize], cols: u64, memo: &mut HashMap<(usize, u64), MPoly>) -> MPoly {
        if rows.is_empty() {
            return MPoly::constant(Rat::one(), self.nvars);
        }
        let key = (rows.len(), cols);
        if let Some(p) = memo.get(&key) {
            return p.clone();
        }
        let r0 = rows[0];
        let mut acc = MPoly::zero(self.nvars);
        let mut sign_pos = true;
        for c in (0..self.cols).filter(|c| cols >> c & 1 == 1) {
            let entry = self.get(r0, c);
            if !entry.is_zero() {
                let sub = self.minor_rec(&rows[1..], cols & !(1 << c), memo);
                if !sub.is_zero() {
                    acc.add_product(entry, &sub, !sign_pos);
                }
            }
            sign_pos = !sign_pos;
        }
        memo.insert(key, acc.clone());
        acc
    }

    pub fn to_entry_rows(&self) -> Vec<Vec<MPoly>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).clone()).collect())
            .collect()
    }
}

fn full_mask(n: usize) -> u64 {
    assert!(n < 64, "matrix too wide for bitmask minors");
    (1u64 << n) - 1
}

fn mask_of(cols: &[usize]) -> u64 {
    cols.iter().fold(0, |m, &c| m | 1 << c)
}

impl Serialize for MatPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_entry_rows().serialize(s)
    }
}
