//! Arithmetic modulo the Mersenne prime 2^61 - 1, used only to certify
//! lower bounds on ranks.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::matq::MatQ;
use super::rat::Rat;

pub const P: u64 = (1 << 61) - 1;

fn mul(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    r
}

fn inv(a: u64) -> u64 {
    pow(a, P - 2)
}

fn reduce(x: &BigInt) -> u64 {
    x.mod_floor(&BigInt::from(P)).to_u64().expect("residue fits in u64")
}

/// Image of a rational in F_p, or `None` if p divides the denominator.
pub fn residue(x: &Rat) -> Option<u64> {
    let den = reduce(x.denom());
    if den == 0 {
        return None;
    }
    Some(mul(reduce(x.numer()), inv(den)))
}

/// Nonzero residues of a matrix as (row, col, value) triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseResidues {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, u64)>,
}

impl SparseResidues {
    pub fn new(m: &MatQ) -> Option<SparseResidues> {
        let mut entries = Vec::new();
        for i in 0..m.rows() {
            for (j, x) in m.row(i).iter().enumerate() {
                if !x.is_zero() {
                    entries.push((i, j, residue(x)?));
                }
            }
        }
        Some(SparseResidues {
            rows: m.rows(),
            cols: m.cols(),
            entries,
        })
    }
}

/// Σ_k s_k M_k reduced mod p, for a nonempty pencil of equally sized matrices.
pub fn combine(ms: &[SparseResidues], s: &[u64]) -> Vec<Vec<u64>> {
    let (rows, cols) = (ms[0].rows, ms[0].cols);
    let mut a = vec![vec![0u64; cols]; rows];
    for (m, &sk) in ms.iter().zip(s) {
        if sk == 0 {
            continue;
        }
        for &(i, j, x) in &m.entries {
            a[i][j] = add(a[i][j], mul(sk, x));
        }
    }
    a
}

fn add(a: u64, b: u64) -> u64 {
    let t = a + b;
    if t >= P {
        t - P
    } else {
        t
    }
}

/// Rank of the reduction mod p, or `None` if some entry has no image.
pub fn rank(m: &MatQ) -> Option<usize> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = Vec::with_capacity(rows);
    for i in 0..rows {
        let row: Option<Vec<u64>> = m.row(i).iter().map(residue).collect();
        a.push(row?);
    }
    Some(rank_rows(a, cols))
}

/// Rank of a matrix over F_p given by its rows.
pub fn rank_rows(mut a: Vec<Vec<u64>>, cols: usize) -> usize {
    let rows = a.len();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(p, r);
        let pinv = inv(a[r][c]);
        for i in r + 1..rows {
            if a[i][c] == 0 {
                continue;
            }
            let f = mul(a[i][c], pinv);
            for j in c..cols {
                let t = mul(f, a[r][j]);
                a[i][j] = sub(a[i][j], t);
            }
        }
        r += 1;
    }
    r
}
