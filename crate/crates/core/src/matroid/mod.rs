//! Intersection lattice, Möbius function, circuits and NBC sets of a
//! realizable arrangement, plus the Betti numbers they determine.
//!
//! Hyperplane subsets are `u64` bitmasks (bit `i` is hyperplane `i`, zero
//! based). Rank queries go through a table of all subset ranks, so the
//! number of hyperplanes is capped at [`MAX_HYPERPLANES`].

pub mod arrangement;
pub mod generators;
pub mod restrict;

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use serde::Serialize;

pub use arrangement::{Arrangement, ArrangementFile};
pub use restrict::restrict_generic;

use crate::error::{Error, Result};
use crate::par;

pub const MAX_HYPERPLANES: usize = 20;

pub type HypSet = u64;

pub fn elements(s: HypSet) -> Vec<usize> {
    (0..64).filter(|i| s >> i & 1 == 1).collect()
}

pub fn set_of(items: &[usize]) -> HypSet {
    items.iter().fold(0, |m, &i| m | 1 << i)
}

/// Combinatorial data of the matroid of an arrangement.
#[derive(Clone, Debug)]
pub struct MatroidData {
    d: usize,
    rank: usize,
    ranks: Vec<u8>,
    /// Flats grouped by rank, each list sorted.
    pub flats: Vec<Vec<HypSet>>,
    /// μ(0̂, X) for every flat X.
    pub mobius: BTreeMap<HypSet, i64>,
    /// Minimal dependent sets, ordered by size then lexicographically.
    pub circuits: Vec<HypSet>,
    /// `C \ {min C}` for each circuit, deduplicated.
    pub broken_circuits: Vec<HypSet>,
    /// NBC sets per degree, each list in lexicographic order of elements.
    pub nbc: Vec<Vec<HypSet>>,
}

/// Betti numbers of the affine complement (`h`), the projective complement
/// (`b`) and their alternating partial sums (`beta`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub h: Vec<i64>,
    pub b: Vec<i64>,
    pub beta: Vec<i64>,
}

impl BettiTable {
    /// Build from h_0..h_n using b_i = h_i - b_(i-1) and beta_i = b_i - beta_(i-1).
    pub fn from_h(h: Vec<i64>) -> BettiTable {
        let n = h.len().saturating_sub(1);
        let partial = |xs: &[i64], len: usize| -> Vec<i64> {
            let mut out: Vec<i64> = Vec::with_capacity(len);
            for i in 0..len {
                let prev = if i == 0 { 0 } else { out[i - 1] };
                out.push(xs[i] - prev);
            }
            out
        };
        let b = partial(&h, n);
        let beta = partial(&b, n);
        BettiTable { h, b, beta }
    }

    /// Ambient dimension n (length of `b`).
    pub fn n(&self) -> usize {
        self.b.len()
    }

    /// Number of hyperplanes, d = h_1.
    pub fn d(&self) -> usize {
        self.h.get(1).copied().unwrap_or(0) as usize
    }

    pub fn b(&self, i: i64) -> i64 {
        if i < 0 {
            0
        } else {
            self.b.get(i as usize).copied().unwrap_or(0)
        }
    }

    pub fn beta(&self, i: i64) -> i64 {
        if i < 0 {
            0
        } else {
            self.beta.get(i as usize).copied().unwrap_or(0)
        }
    }

    pub fn h(&self, i: i64) -> i64 {
        if i < 0 {
            0
        } else {
            self.h.get(i as usize).copied().unwrap_or(0)
        }
    }

    /// Check h_i = b_i + b_(i-1), b_i = beta_i + beta_(i-1), the unit
    /// entries, nonnegativity and the vanishing of sum (-1)^i h_i.
    pub fn check(&self) -> Result<()> {
        let n = self.n() as i64;
        let fail = |msg: String| Err(Error::Consistency(msg));
        if self.h.len() as i64 != n + 1 {
            return fail("h has the wrong length".into());
        }
        for i in 0..=n {
            if self.h(i) != self.b(i) + self.b(i - 1) {
                return fail(format!("h_{i} != b_{i} + b_{}", i - 1));
            }
        }
        for i in 0..n {
            if self.b(i) != self.beta(i) + self.beta(i - 1) {
                return fail(format!("b_{i} != beta_{i} + beta_{}", i - 1));
            }
        }
        if n > 0 && (self.h(0), self.b(0), self.beta(0)) != (1, 1, 1) {
            return fail("h_0, b_0, beta_0 must be 1".into());
        }
        if self.h.iter().chain(&self.b).chain(&self.beta).any(|&x| x < 0) {
            return fail(format!("negative Betti number in {self:?}"));
        }
        Ok(())
    }
}

impl MatroidData {
    pub fn build(a: &Arrangement) -> Result<MatroidData> {
        let d = a.d();
        if d > MAX_HYPERPLANES {
            return Err(Error::OutOfRange {
                what: "number of hyperplanes",
                value: d as i64,
                range: format!("[0, {MAX_HYPERPLANES}]"),
            });
        }
        let ranks: Vec<u8> = par::map_range(1 << d, |m| a.rank_of(m as u64) as u8);
        let rank = ranks[(1usize << d) - 1] as usize;
        let mut m = MatroidData {
            d,
            rank,
            ranks,
            flats: Vec::new(),
            mobius: BTreeMap::new(),
            circuits: Vec::new(),
            broken_circuits: Vec::new(),
            nbc: Vec::new(),
        };
        m.flats = m.enumerate_flats();
        m.mobius = m.compute_mobius();
        m.circuits = m.enumerate_circuits();
        m.broken_circuits = m
            .circuits
            .iter()
            .map(|&c| c & !(c & c.wrapping_neg()))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        m.nbc = m.enumerate_nbc();
        Ok(m)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rank_of(&self, s: HypSet) -> usize {
        self.ranks[s as usize] as usize
    }

    pub fn is_independent(&self, s: HypSet) -> bool {
        self.rank_of(s) == s.count_ones() as usize
    }

    pub fn closure(&self, s: HypSet) -> HypSet {
        let r = self.rank_of(s);
        (0..self.d)
            .filter(|&e| self.rank_of(s | 1 << e) == r)
            .fold(s, |acc, e| acc | 1 << e)
    }

    fn enumerate_flats(&self) -> Vec<Vec<HypSet>> {
        let mut flats = vec![vec![self.closure(0)]];
        for _ in 1..=self.rank {
            let prev = flats.last().expect("nonempty");
            let next: BTreeSet<HypSet> = par::map(prev, |&f| {
                (0..self.d)
                    .filter(|&e| f >> e & 1 == 0)
                    .map(|e| self.closure(f | 1 << e))
                    .collect::<Vec<_>>()
            })
            .into_iter()
            .flatten()
            .collect();
            flats.push(next.into_iter().collect());
        }
        flats
    }

    fn compute_mobius(&self) -> BTreeMap<HypSet, i64> {
        let mut mu: BTreeMap<HypSet, i64> = BTreeMap::new();
        let mut below: Vec<HypSet> = Vec::new();
        for level in &self.flats {
            for &x in level {
                let value = if below.is_empty() {
                    1
                } else {
                    -below
                        .iter()
                        .filter(|&&y| y & x == y && y != x)
                        .map(|y| mu[y])
                        .sum::<i64>()
                };
                mu.insert(x, value);
            }
            below.extend(level.iter().copied());
        }
        mu
    }

    fn enumerate_circuits(&self) -> Vec<HypSet> {
        let mut out = Vec::new();
        for size in 1..=(self.rank + 1).min(self.d) {
            for c in (0..self.d).combinations(size) {
                let s = set_of(&c);
                if self.rank_of(s) == size - 1 && c.iter().all(|&e| self.is_independent(s & !(1 << e))) {
                    out.push(s);
                }
            }
        }
        out
    }

    fn enumerate_nbc(&self) -> Vec<Vec<HypSet>> {
        (0..=self.rank)
            .map(|i| {
                (0..self.d)
                    .combinations(i)
                    .map(|c| set_of(&c))
                    .filter(|&s| self.is_nbc(s))
                    .collect()
            })
            .collect()
    }

    pub fn is_nbc(&self, s: HypSet) -> bool {
        self.is_independent(s) && self.broken_circuits.iter().all(|&b| b & s != b)
    }

    /// Whitney numbers h_i = sum over rank-i flats of |μ|.
    pub fn whitney(&self) -> Vec<i64> {
        self.flats
            .iter()
            .map(|level| level.iter().map(|x| self.mobius[x].abs()).sum())
            .collect()
    }

    /// Betti table, cross-checked against the NBC counts and the sign
    /// pattern of μ.
    pub fn betti(&self) -> Result<BettiTable> {
        let h = self.whitney();
        for (i, level) in self.nbc.iter().enumerate() {
            if level.len() as i64 != h[i] {
                return Err(Error::Consistency(format!(
                    "NBC count {} != Whitney number h_{i} = {}",
                    level.len(),
                    h[i]
                )));
            }
        }
        for (r, level) in self.flats.iter().enumerate() {
            let sign = if r % 2 == 0 { 1 } else { -1 };
            if level.iter().any(|x| self.mobius[x] * sign <= 0) {
                return Err(Error::Consistency(format!(
                    "Möbius values at rank {r} do not alternate in sign"
                )));
            }
        }
        let t = BettiTable::from_h(h);
        if self.d > 0 {
            let alt: i64 =
                t.h.iter()
                    .enumerate()
                    .map(|(i, x)| if i % 2 == 0 { *x } else { -x })
                    .sum();
            if alt != 0 {
                return Err(Error::Consistency("sum (-1)^i h_i != 0".into()));
            }
        }
        t.check()?;
        Ok(t)
    }

    /// Search for a separator: a nonempty proper subset S with
    /// r(S) + r(E \ S) = r(E). Returns the separator containing hyperplane 0.
    pub fn separator(&self) -> Option<HypSet> {
        let full: HypSet = (1u64 << self.d) - 1;
        // fix hyperplane 0 on the S side to halve the search
        (0..(1u64 << self.d.saturating_sub(1)))
            .map(|m| (m << 1) | 1)
            .filter(|&s| s != full)
            .find(|&s| self.rank_of(s) + self.rank_of(full & !s) == self.rank)
    }

    /// Connected components of the matroid (elements sharing a circuit).
    pub fn components(&self) -> Vec<HypSet> {
        let mut comps: Vec<HypSet> = (0..self.d).map(|e| 1 << e).collect();
        for &c in &self.circuits {
            let (touch, rest): (Vec<HypSet>, Vec<HypSet>) = comps.into_iter().partition(|&k| k & c != 0);
            comps = rest;
            comps.push(touch.into_iter().fold(0, |a, b| a | b));
        }
        comps.sort();
        comps
    }
}

/// Whether the arrangement is indecomposable. Decided by β_(n-1) > 0 and
/// independently by a separator search; the two must agree.
pub fn is_indecomposable(m: &MatroidData, betti: &BettiTable) -> Result<bool> {
    let by_crapo = betti.beta.last().is_some_and(|&b| b > 0);
    let by_partition = m.d() <= 1 || m.separator().is_none();
    if by_crapo != by_partition {
        return Err(Error::Consistency(format!(
            "Crapo invariant test ({by_crapo}) disagrees with connectivity test ({by_partition})"
        )));
    }
    Ok(by_crapo)
}
