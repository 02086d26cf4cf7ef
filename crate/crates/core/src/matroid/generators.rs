//! Built-in arrangements: generic, braid, and the named fixture corpus.

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::linalg::Rat;

/// `d` hyperplanes in general position in Q^n (every n of them independent),
/// drawn from a seeded RNG.
pub fn generic(d: usize, n: usize, seed: u64) -> Result<Arrangement> {
    if n == 0 || d < n {
        return Err(Error::OutOfRange {
            what: "generic arrangement degree",
            value: d as i64,
            range: format!("[n, inf) with n = {n} >= 1"),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..100 {
        let normals: Vec<Vec<Rat>> = (0..d)
            .map(|_| (0..n).map(|_| Rat::from(rng.gen_range(-9i64..=9))).collect())
            .collect();
        let Ok(a) = Arrangement::from_normals(format!("generic({d},{n})"), n, normals) else {
            continue;
        };
        if a.d() == d && in_general_position(&a) {
            return Ok(a);
        }
    }
    Err(Error::GenericityFailure { attempts: 100 })
}

fn in_general_position(a: &Arrangement) -> bool {
    let k = a.n().min(a.d());
    (0..a.d())
        .combinations(k)
        .all(|s| a.rank_of(s.iter().fold(0, |m, &i| m | 1 << i)) == k)
}

/// Braid arrangement x_i - x_j (i < j) in Q^m. Hyperplanes are ordered by
/// the larger index first, so the first three (12, 13, 23) are concurrent.
pub fn braid(m: usize) -> Arrangement {
    let mut normals = Vec::new();
    for j in 1..m {
        for i in 0..j {
            let mut v = vec![Rat::zero(); m];
            v[i] = Rat::from(1);
            v[j] = Rat::from(-1);
            normals.push(v);
        }
    }
    Arrangement::from_normals(format!("braid({m})"), m, normals).expect("braid normals are distinct")
}

/// Braid arrangement rewritten in coordinates of its span (dimension m - 1).
pub fn braid_essential(m: usize) -> Arrangement {
    braid(m).essentialize().with_name(format!("braid({m})-essential"))
}

/// x, y, x+y, z: the product of a pencil of three lines and a point.
pub fn decomposable() -> Arrangement {
    Arrangement::from_i64("decomposable", 3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1]]).expect("valid fixture")
}

/// x, y, x+y, z, y+z: two triple points.
pub fn two_triple_points() -> Arrangement {
    Arrangement::from_i64(
        "two-triple-points",
        3,
        &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1], &[0, 1, 1]],
    )
    .expect("valid fixture")
}

/// Essential component seed for the braid fixture in the `e_k - e_6` basis:
/// e_12 - e_13 - e_24 + e_34, the pairing of opposite edges of K4.
pub fn braid_essential_seed() -> Vec<Rat> {
    [1, -1, 0, 0, -1].iter().map(|&x| Rat::from(x)).collect()
}

/// Named fixtures accepted by the CLI.
pub fn named(name: &str) -> Option<Arrangement> {
    match name {
        "braid" | "braid-essential" => Some(braid_essential(4)),
        "braid-ambient" => Some(braid(4)),
        "decomposable" => Some(decomposable()),
        "two-triple-points" => Some(two_triple_points()),
        _ => None,
    }
}

pub const NAMED_FIXTURES: [&str; 4] = ["braid", "braid-ambient", "decomposable", "two-triple-points"];

/// Seed used for the committed generic fixtures.
pub const GENERIC_FIXTURE_SEED: u64 = 2024;

/// (d, n) pairs of the shipped generic fixtures: n in {3, 4, 5}, n < d <= 8.
pub fn generic_fixture_shapes() -> Vec<(usize, usize)> {
    (3..=5).flat_map(|n| (n + 1..=8).map(move |d| (d, n))).collect()
}
