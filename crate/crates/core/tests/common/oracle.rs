//! Independent reference implementations used only by the tests: plain
//! Gaussian elimination over BigRational, Whitney's subset formula, the
//! Möbius recursion over brute-force flats, and deletion–restriction.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use hyperres::matroid::arrangement::Arrangement;

fn to_big(a: &Arrangement) -> Vec<Vec<BigRational>> {
    a.normals()
        .iter()
        .map(|v| v.iter().map(|x| x.inner().clone()).collect())
        .collect()
}

/// Rank of the rows selected by `mask`, by textbook elimination.
pub fn rank(rows: &[Vec<BigRational>], mask: u64) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, r)| r.clone())
        .collect();
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] / &pivot;
                for k in 0..cols {
                    let t = &f * &m[r][k];
                    m[i][k] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

pub struct Oracle {
    pub d: usize,
    pub n: usize,
    pub ranks: Vec<usize>,
}

impl Oracle {
    pub fn new(a: &Arrangement) -> Oracle {
        let rows = to_big(a);
        let d = a.d();
        let ranks = (0..1u64 << d).map(|m| rank(&rows, m)).collect();
        Oracle { d, n: a.n(), ranks }
    }

    pub fn closure(&self, s: u64) -> u64 {
        let r = self.ranks[s as usize];
        (0..self.d)
            .filter(|&h| self.ranks[(s | 1 << h) as usize] == r)
            .fold(s, |acc, h| acc | 1 << h)
    }

    pub fn flats(&self) -> Vec<u64> {
        (0..1u64 << self.d).filter(|&s| self.closure(s) == s).collect()
    }

    /// μ(0̂, F) by μ(F) = -Σ_(G ⊊ F) μ(G).
    pub fn mobius(&self) -> BTreeMap<u64, i64> {
        let mut flats = self.flats();
        flats.sort_by_key(|&f| (self.ranks[f as usize], f));
        let mut mu = BTreeMap::new();
        for &f in &flats {
            let v = if f == 0 {
                1
            } else {
                -mu.iter()
                    .filter(|(&g, _)| g & f == g && g != f)
                    .map(|(_, &m)| m)
                    .sum::<i64>()
            };
            mu.insert(f, v);
        }
        mu
    }

    /// h_i = Σ_(rank F = i) |μ(F)|.
    pub fn whitney_by_mobius(&self) -> Vec<i64> {
        let mut h = vec![0; self.rank() + 1];
        for (f, m) in self.mobius() {
            h[self.ranks[f as usize]] += m.abs();
        }
        h
    }

    /// h_i = |Σ_(S : r(S) = i) (-1)^|S||.
    pub fn whitney_by_subsets(&self) -> Vec<i64> {
        let mut h = vec![0i64; self.rank() + 1];
        for s in 0..1u64 << self.d {
            let sign = if s.count_ones() % 2 == 0 { 1 } else { -1 };
            h[self.ranks[s as usize]] += sign;
        }
        h.into_iter().map(i64::abs).collect()
    }

    pub fn rank(&self) -> usize {
        self.ranks[(1usize << self.d) - 1]
    }
}

/// Characteristic polynomial coefficients (index = power of t) by
/// χ(A) = χ(A \ H) - χ(A^H).
pub fn characteristic_by_deletion(a: &Arrangement) -> Vec<i64> {
    let n = a.n();
    if a.d() == 0 {
        let mut out = vec![0; n + 1];
        out[n] = 1;
        return out;
    }
    let last = a.d() - 1;
    let del = characteristic_by_deletion(&a.delete(last));
    let res = characteristic_by_deletion(&a.restrict_to(last));
    (0..=n)
        .map(|k| del[k] - if k < res.len() { res[k] } else { 0 })
        .collect()
}

/// Whitney numbers of an essential arrangement from χ: h_i = |[t^(n-i)] χ|.
pub fn whitney_by_deletion(a: &Arrangement) -> Vec<i64> {
    let chi = characteristic_by_deletion(a);
    let n = a.n();
    (0..=n).map(|i| chi[n - i].abs()).collect()
}

/// b_i = Σ_(k <= i) (-1)^(i-k) h_k for i < n.
pub fn projective_betti(h: &[i64]) -> Vec<i64> {
    let n = h.len() - 1;
    (0..n)
        .map(|i| (0..=i).map(|k| if (i - k) % 2 == 0 { h[k] } else { -h[k] }).sum())
        .collect()
}
