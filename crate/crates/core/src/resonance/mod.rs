//! Resonance varieties R^i_j as determinantal loci of the φ_i.

pub mod codim;
pub mod discover;
pub mod kernel;
pub mod propagate;

use serde::Serialize;

pub use codim::{codim_report, codimension_probe, CodimReport, CodimensionEvidence, ProbeVerdict, TheoryBounds};
pub use discover::{discover, Certificate, Discovery, LinearComponent, Provenance, DEFAULT_SPAN_POINTS};
pub use kernel::kernel_basis;
pub use propagate::{propagation_check, PropagationReport};

use crate::error::{Error, Result};
use crate::linalg::{MPoly, Rat};
use crate::os::AomotoComplex;
use crate::par;

/// dims_i = dim H^i(H^•(U), v ∪ ·) for every degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MembershipResult {
    pub point: Vec<Rat>,
    pub dims: Vec<usize>,
}

impl MembershipResult {
    /// v ∈ R^i_j.
    pub fn in_resonance(&self, i: usize, j: usize) -> bool {
        self.dims.get(i).is_some_and(|&x| x >= j)
    }
}

pub fn membership(c: &AomotoComplex, v: &[Rat]) -> Result<MembershipResult> {
    check_len(c, v)?;
    let n = c.n();
    let ranks: Vec<usize> = (0..n as i64).map(|i| c.rank_at(i, v)).collect::<Result<_>>()?;
    let dims = (0..n)
        .map(|i| {
            let prev = if i == 0 { 0 } else { ranks[i - 1] };
            c.b(i) - prev - ranks[i]
        })
        .collect();
    Ok(MembershipResult {
        point: v.to_vec(),
        dims,
    })
}

/// dims_i at v, computing only the two ranks it needs.
pub fn dim_at(c: &AomotoComplex, i: usize, v: &[Rat]) -> Result<usize> {
    check_len(c, v)?;
    Ok(c.b(i) - c.rank_at(i as i64 - 1, v)? - c.rank_at(i as i64, v)?)
}

pub fn in_resonance(c: &AomotoComplex, i: usize, j: usize, v: &[Rat]) -> Result<bool> {
    Ok(dim_at(c, i, v)? >= j)
}

fn check_len(c: &AomotoComplex, v: &[Rat]) -> Result<()> {
    if v.len() != c.nvars() {
        return Err(Error::DimensionMismatch {
            expected: c.nvars(),
            found: v.len(),
            context: "point of H^1(U)".into(),
        });
    }
    Ok(())
}

fn check_ij(c: &AomotoComplex, i: usize, j: usize) -> Result<()> {
    let n = c.n();
    if n < 2 || i > n - 2 {
        return Err(Error::OutOfRange {
            what: "degree i",
            value: i as i64,
            range: format!("[0, {}]", n as i64 - 2),
        });
    }
    let beta = c.beta(i);
    if j == 0 || j > beta {
        return Err(Error::OutOfRange {
            what: "depth j",
            value: j as i64,
            range: format!("[1, {beta}]"),
        });
    }
    Ok(())
}

/// Size of the minors cutting out R^i_j: β_i + 1 - j.
pub fn minor_size(c: &AomotoComplex, i: usize, j: usize) -> usize {
    c.beta(i) + 1 - j
}

/// All (β_i + 1 - j)-minors of φ_i, rows then columns lexicographic.
pub fn fitting_equations(c: &AomotoComplex, i: usize, j: usize) -> Result<Vec<MPoly>> {
    check_ij(c, i, j)?;
    Ok(c.phi(i)
        .minors(minor_size(c, i, j))?
        .into_iter()
        .map(|m| m.poly)
        .collect())
}

/// Maximal minors of φ_1 with column `col` (zero based) removed, each divided
/// exactly by x_col. Cuts out R^1.
pub fn reduced_equations(c: &AomotoComplex, col: usize) -> Result<Vec<MPoly>> {
    check_ij(c, 1, 1)?;
    let b1 = c.nvars();
    if col >= b1 {
        return Err(Error::OutOfRange {
            what: "column",
            value: col as i64 + 1,
            range: format!("[1, {b1}]"),
        });
    }
    let reduced = c.phi(1).remove_col(col);
    let x = MPoly::var(col, b1);
    let minors = reduced.minors(reduced.cols())?;
    let quotients = par::map(&minors, |m| m.poly.divide_exact(&x));
    quotients.into_iter().collect()
}

/// Whether every polynomial vanishes at v.
pub fn all_vanish(polys: &[MPoly], v: &[Rat]) -> Result<bool> {
    for p in polys {
        if !p.eval(v)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
