use super::{binom, Hypothesis, PositivityReport, Record, Relation};
use crate::matroid::BettiTable;

/// P^DW(d, n, i) = C(n, i) + (d - n) C(n - 1, i - 1).
pub fn dowling_wilson(d: i64, n: i64, i: i64) -> i64 {
    binom(n, i) + (d - n) * binom(n - 1, i - 1)
}

/// P^B(d, n, i) = C(n, i) + (d - n) C(n, i - 1) - δ_(i, n-1).
pub fn brylawski(d: i64, n: i64, i: i64) -> i64 {
    binom(n, i) + (d - n) * binom(n, i - 1) - i64::from(i == n - 1)
}

/// (d, n) ∈ Ω: d - n >= 2 and (d, n) != (7, 4).
pub fn in_omega(d: i64, n: i64) -> bool {
    d - n >= 2 && (d, n) != (7, 4)
}

/// Dowling–Wilson, Brylawski, the restricted Brylawski bounds and the
/// binomial bounds for an essential arrangement, each gated on Ω and
/// indecomposability.
pub fn verify_lower_bounds(b: &BettiTable, indecomposable: bool) -> PositivityReport {
    let d = b.d() as i64;
    let n = b.n() as i64;
    let ind = Hypothesis::from_bool(indecomposable);
    let mut out = Vec::new();

    for i in 0..=n {
        out.push(Record::ints(
            "dowling-wilson",
            format!("h_{i}"),
            Hypothesis::Met,
            b.h(i),
            Relation::Ge,
            dowling_wilson(d, n, i),
        ));
    }

    let omega = ind.and(Hypothesis::from_bool(in_omega(d, n)));
    for i in 0..n {
        out.push(Record::ints(
            "brylawski",
            format!("h_{i}"),
            omega,
            b.h(i),
            Relation::Ge,
            brylawski(d, n, i),
        ));
    }
    if n >= 1 {
        out.push(Record::ints(
            "brylawski-top-beta",
            format!("beta_{}", n - 1),
            omega,
            b.beta(n - 1),
            Relation::Ge,
            (d + 2 - 2 * n).max(1),
        ));
    }

    for i in 1..n {
        let best = (i..n)
            .filter(|&s| in_omega(d, s + 1))
            .map(|s| brylawski(d, s + 1, i))
            .max();
        out.push(Record::ints(
            "restricted-h",
            format!("h_{i}"),
            ind.and(Hypothesis::from_bool(best.is_some())),
            b.h(i),
            Relation::Ge,
            best.unwrap_or(0),
        ));
        let beta_gate = ind.and(Hypothesis::from_bool(in_omega(d, i + 1)));
        out.push(Record::ints(
            "restricted-beta",
            format!("beta_{i}"),
            beta_gate,
            b.beta(i),
            Relation::Ge,
            (d - 2 * i).max(1),
        ));
        // b_i = beta_i + beta_(i-1) with both restricted bounds applied; the
        // second needs i - 1 > 0.
        let b_gate = beta_gate.and(Hypothesis::from_bool(in_omega(d, i) && i >= 2));
        out.push(Record::ints(
            "restricted-b",
            format!("b_{i}"),
            b_gate,
            b.b(i),
            Relation::Ge,
            2 * (d - 2 * i - 1),
        ));
    }

    for i in 0..n {
        out.push(Record::ints(
            "binomial-b",
            format!("b_{i}"),
            ind,
            b.b(i),
            Relation::Ge,
            binom(n - 1, i),
        ));
    }
    for i in 0..=n {
        out.push(Record::ints(
            "binomial-h",
            format!("h_{i}"),
            ind,
            b.h(i),
            Relation::Ge,
            binom(n, i),
        ));
    }
    for i in 0..n {
        if i > 0 {
            out.push(Record::ints(
                "beta-lower",
                format!("beta_{i}"),
                ind,
                b.beta(i),
                Relation::Ge,
                n - 1 - i,
            ));
        }
        out.push(Record::ints(
            "beta-positive",
            format!("beta_{i}"),
            ind,
            b.beta(i),
            Relation::Gt,
            0,
        ));
    }
    PositivityReport { records: out }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::positivity::Verdict;

    fn generic_betti(d: i64, n: i64) -> BettiTable {
        let mut h: Vec<i64> = (0..n).map(|i| binom(d, i)).collect();
        h.push(binom(d - 1, n - 1));
        BettiTable::from_h(h)
    }

    #[test]
    fn formula_values() {
        assert_eq!(dowling_wilson(5, 3, 2), 7);
        assert_eq!(brylawski(6, 3, 2), 11);
        assert!(!in_omega(7, 4));
        assert!(in_omega(6, 4) && in_omega(8, 4) && !in_omega(5, 4));
    }

    #[test]
    fn braid_equalities() {
        let b = BettiTable::from_h(vec![1, 6, 11, 6]);
        let rep = verify_lower_bounds(&b, true);
        assert!(!rep.has_failures());
        let top = rep.named("brylawski-top-beta").next().unwrap();
        assert_eq!((top.lhs.as_str(), top.rhs.as_str(), top.tight), ("2", "2", true));
        let h2 = rep.named("brylawski").find(|r| r.index == "h_2").unwrap();
        assert_eq!((h2.lhs.as_str(), h2.rhs.as_str(), h2.tight), ("11", "11", true));
        let b1 = rep.named("restricted-b").find(|r| r.index == "b_1").unwrap();
        assert_eq!(b1.verdict, Verdict::HypothesisNotMet);
    }

    #[test]
    fn generic_corpus_holds() {
        for n in 3..=5 {
            for d in n + 1..=10 {
                let rep = verify_lower_bounds(&generic_betti(d, n), true);
                assert!(
                    !rep.has_failures(),
                    "d={d} n={n}: {:?}",
                    rep.failures().collect::<Vec<_>>()
                );
            }
        }
    }

    #[test]
    fn omega_exclusion() {
        let rep = verify_lower_bounds(&generic_betti(7, 4), true);
        assert!(rep.named("brylawski").all(|r| r.verdict == Verdict::HypothesisNotMet));
        assert!(rep
            .named("brylawski-top-beta")
            .all(|r| r.verdict == Verdict::HypothesisNotMet));
    }

    #[test]
    fn decomposable_gates() {
        let b = BettiTable::from_h(vec![1, 3, 3, 1]);
        let rep = verify_lower_bounds(&b, false);
        assert!(rep
            .named("beta-positive")
            .all(|r| r.verdict == Verdict::HypothesisNotMet));
        assert!(rep.named("dowling-wilson").all(|r| r.verdict == Verdict::Holds));
    }
}
