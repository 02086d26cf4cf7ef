use itertools::Itertools;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use hyperres::linalg::{modp, MPoly, MatPoly, MatQ, Rat};
use hyperres::resonance::all_vanish;
use hyperres::sample::random_vector;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=5).prop_map(|(p, q)| Rat::new(p, q))
}

fn square(n: usize) -> impl Strategy<Value = MatQ> {
    prop::collection::vec(small_rat(), n * n)
        .prop_map(move |v| MatQ::from_rows(v.chunks(n).map(<[Rat]>::to_vec).collect()))
}

/// Leibniz formula, independent of both elimination and cofactor expansion.
fn leibniz(m: &MatQ) -> Rat {
    let n = m.rows();
    (0..n)
        .permutations(n)
        .map(|p| {
            let inversions = (0..n).tuple_combinations().filter(|&(a, b)| p[a] > p[b]).count();
            let term: Rat = (0..n).map(|i| m.get(i, p[i]).clone()).product();
            if inversions % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// Matrices of linear forms in `nvars` variables with coefficients in
/// {-1, 0, 1}, which makes rank drops at small points common.
fn linear_matrix(rows: usize, cols: usize, nvars: usize) -> impl Strategy<Value = MatPoly> {
    prop::collection::vec(-1i64..=1, rows * cols * nvars).prop_map(move |c| {
        let entries: Vec<MPoly> = c
            .chunks(nvars)
            .map(|k| MPoly::linear(&k.iter().map(|&x| Rat::from(x)).collect::<Vec<_>>()))
            .collect();
        MatPoly::from_rows(nvars, entries.chunks(cols).map(<[MPoly]>::to_vec).collect())
    })
}

fn small_poly(nvars: usize) -> impl Strategy<Value = MPoly> {
    prop::collection::vec((prop::collection::vec(0u32..=2, nvars), -5i64..=5), 0..6)
        .prop_map(move |terms| MPoly::from_terms(nvars, terms.into_iter().map(|(e, c)| (e, Rat::from(c)))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn determinant_routes_agree(n in 1usize..=5, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = MatQ::from_rows((0..n).map(|_| {
            random_vector(&mut rng, n).into_iter().map(|x| Rat::new(x.numer() % 1000, 7)).collect()
        }).collect());
        let bareiss = m.det().unwrap();
        let cofactor = MatPoly::from_constant(&m, 1).det().unwrap().eval(&[Rat::zero()]).unwrap();
        prop_assert_eq!(&bareiss, &cofactor);
        prop_assert_eq!(bareiss, leibniz(&m));
    }

    #[test]
    fn rational_determinants_agree(m in (1usize..=4).prop_flat_map(square)) {
        let expansion = MatPoly::from_constant(&m, 1).det().unwrap().eval(&[Rat::zero()]).unwrap();
        prop_assert_eq!(m.det().unwrap(), expansion);
    }

    #[test]
    fn rank_is_bounded_and_certificates_are_sound(m in (1usize..=5).prop_flat_map(square)) {
        let r = m.rank();
        prop_assert!(r <= m.rows().min(m.cols()));
        if let Some(rp) = modp::rank(&m) {
            prop_assert!(rp <= r);
        }
        prop_assert_eq!(m.rank_with_cap(r), r);
        prop_assert_eq!(m.rank_and_nullspace().basis.len(), m.cols() - r);
        prop_assert_eq!(m.det().unwrap().is_zero(), r < m.rows());
    }

    #[test]
    fn minors_vanish_iff_rank_drops(
        m in (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| linear_matrix(r, c, 2)),
        p in prop::collection::vec(-2i64..=2, 2),
    ) {
        let point: Vec<Rat> = p.into_iter().map(Rat::from).collect();
        let rank = m.eval(&point).unwrap().rank();
        for k in 1..=m.rows().min(m.cols()) {
            let minors: Vec<MPoly> = m.minors(k).unwrap().into_iter().map(|x| x.poly).collect();
            prop_assert_eq!(all_vanish(&minors, &point).unwrap(), rank < k, "k = {}", k);
        }
    }

    #[test]
    fn minors_are_homogeneous_of_their_size(
        m in (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| linear_matrix(r, c, 3)),
    ) {
        for k in 1..=m.rows().min(m.cols()) {
            for minor in m.minors(k).unwrap() {
                let p = minor.poly;
                prop_assert!(p.is_zero() || (p.is_homogeneous() && p.degree() == Some(k as u32)));
            }
        }
    }

    #[test]
    fn rank_at_a_point_never_exceeds_generic_rank(
        m in (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| linear_matrix(r, c, 3)),
        p in prop::collection::vec(-2i64..=2, 3),
        seed in any::<u64>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let generic = m.eval(&random_vector(&mut rng, 3)).unwrap().rank();
        let again = m.eval(&random_vector(&mut rng, 3)).unwrap().rank();
        prop_assert_eq!(generic, again);
        let point: Vec<Rat> = p.into_iter().map(Rat::from).collect();
        prop_assert!(m.eval(&point).unwrap().rank() <= generic);
    }

    #[test]
    fn polynomial_ring_laws(a in small_poly(3), b in small_poly(3), c in small_poly(3), x in prop::collection::vec(small_rat(), 3)) {
        prop_assert_eq!(&(&a * &(&b + &c)), &(&(&a * &b) + &(&a * &c)));
        prop_assert_eq!((&a * &b).eval(&x).unwrap(), a.eval(&x).unwrap() * b.eval(&x).unwrap());
        if !b.is_zero() {
            prop_assert_eq!((&a * &b).divide_exact(&b).unwrap(), a.clone());
        }
        let terms = a.to_terms();
        prop_assert_eq!(MPoly::from_term_list(3, &terms), a);
    }

    #[test]
    fn rationals_stay_reduced(p in -1000i64..=1000, q in prop::sample::select(vec![-12i64, -3, -1, 1, 2, 6, 35])) {
        let x = Rat::new(p, q);
        prop_assert!(x.denom() > &0.into());
        prop_assert!(num_integer::Integer::gcd(x.numer(), x.denom()) == 1.into() || x.is_zero());
        let text = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<Rat>(&text).unwrap(), x);
    }
}
