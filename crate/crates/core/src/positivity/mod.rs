//! Numeric inequalities on Betti numbers: classical lower bounds, the Chern
//! series c^(j)_t and its Schur positivity, and the b_2/b_3 root bounds.

pub mod bounds;
pub mod chern;
pub mod generic;
pub mod grassmann;
pub mod schur;
pub mod suite;

use std::fmt;

use serde::Serialize;

pub use bounds::{brylawski, dowling_wilson, in_omega, verify_lower_bounds};
pub use chern::{c1_routes, chern_coefficients, chern_series, ChernSeries, QProvenance};
pub use generic::{generic_oracle, GenericOracle};
pub use grassmann::{grassmann_probe, sigma_image, GrassmannReport};
pub use schur::{partitions, schur_polynomial, schur_value, schur_values, SchurValue};
pub use suite::{b2_b3_bounds, chern_suite};

use crate::linalg::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Fails,
    HypothesisNotMet,
    InconclusiveQ,
}

/// Status of the hypotheses of one inequality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Hypothesis {
    Met,
    /// Met on the strength of a randomized probe rather than a proof.
    Probe,
    NotMet,
    /// Depends on a codimension only known up to a bracket.
    Unknown,
}

impl Hypothesis {
    fn and(self, other: Hypothesis) -> Hypothesis {
        use Hypothesis::*;
        match (self, other) {
            (NotMet, _) | (_, NotMet) => NotMet,
            (Unknown, _) | (_, Unknown) => Unknown,
            (Probe, _) | (_, Probe) => Probe,
            _ => Met,
        }
    }

    fn from_bool(b: bool) -> Hypothesis {
        if b {
            Hypothesis::Met
        } else {
            Hypothesis::NotMet
        }
    }
}

/// q_lower <= q <= q_upper.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct QBracket {
    pub lower: i64,
    pub upper: i64,
    /// The lower bound rests on a randomized probe.
    pub probe: bool,
}

impl QBracket {
    pub fn exact(q: i64) -> QBracket {
        QBracket {
            lower: q,
            upper: q,
            probe: false,
        }
    }

    pub fn new(lower: i64, upper: i64) -> QBracket {
        QBracket {
            lower,
            upper,
            probe: false,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }

    /// Status of the hypothesis q > k.
    pub fn exceeds(&self, k: i64) -> Hypothesis {
        if self.lower > k {
            if self.probe {
                Hypothesis::Probe
            } else {
                Hypothesis::Met
            }
        } else if self.upper <= k {
            Hypothesis::NotMet
        } else {
            Hypothesis::Unknown
        }
    }
}

/// One instantiated inequality lhs >= rhs (or lhs > rhs, or lhs = rhs).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub name: String,
    pub index: String,
    pub hypothesis: Hypothesis,
    pub relation: Relation,
    pub lhs: String,
    pub rhs: String,
    /// Whether the inequality is numerically true, independent of hypotheses.
    pub satisfied: bool,
    pub tight: bool,
    pub verdict: Verdict,
    pub witness: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = ">")]
    Gt,
    #[serde(rename = "=")]
    Eq,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Ge => ">=",
            Relation::Gt => ">",
            Relation::Eq => "=",
        })
    }
}

impl Record {
    /// Compare two exact values. The verdict follows the hypothesis: proved
    /// hypotheses give holds/fails, unknown ones inconclusive-q.
    pub fn compare(
        name: &str,
        index: impl Into<String>,
        hypothesis: Hypothesis,
        lhs: &Rat,
        relation: Relation,
        rhs: &Rat,
    ) -> Record {
        let satisfied = match relation {
            Relation::Ge => lhs >= rhs,
            Relation::Gt => lhs > rhs,
            Relation::Eq => lhs == rhs,
        };
        Record::build(
            name,
            index.into(),
            hypothesis,
            relation,
            lhs.to_string(),
            rhs.to_string(),
            satisfied,
            lhs == rhs,
        )
    }

    #[allow(clippy::too_many_arguments)]
    pub(crate) fn build(
        name: &str,
        index: String,
        hypothesis: Hypothesis,
        relation: Relation,
        lhs: String,
        rhs: String,
        satisfied: bool,
        tight: bool,
    ) -> Record {
        let verdict = match hypothesis {
            Hypothesis::Met | Hypothesis::Probe if satisfied => Verdict::Holds,
            Hypothesis::Met | Hypothesis::Probe => Verdict::Fails,
            Hypothesis::NotMet => Verdict::HypothesisNotMet,
            Hypothesis::Unknown => Verdict::InconclusiveQ,
        };
        let witness = (verdict == Verdict::Fails).then(|| format!("{lhs} {relation} {rhs} is false"));
        Record {
            name: name.to_string(),
            index,
            hypothesis,
            relation,
            lhs,
            rhs,
            satisfied,
            tight,
            verdict,
            witness,
        }
    }

    fn ints(
        name: &str,
        index: impl Into<String>,
        hypothesis: Hypothesis,
        lhs: i64,
        relation: Relation,
        rhs: i64,
    ) -> Record {
        Record::compare(name, index, hypothesis, &Rat::from(lhs), relation, &Rat::from(rhs))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PositivityReport {
    pub records: Vec<Record>,
}

impl PositivityReport {
    pub fn extend(&mut self, other: PositivityReport) {
        self.records.extend(other.records);
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| r.verdict == Verdict::Fails)
    }

    pub fn has_failures(&self) -> bool {
        self.failures().next().is_some()
    }

    pub fn named<'a>(&'a self, name: &'a str) -> impl Iterator<Item = &'a Record> + 'a {
        self.records.iter().filter(move |r| r.name == name)
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.records.iter().filter(|r| r.verdict == verdict).count()
    }
}

/// Binomial coefficient, zero outside 0 <= k <= n.
pub fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: i128 = 1;
    for t in 0..k {
        r = r * (n - t) as i128 / (t + 1) as i128;
    }
    r as i64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binom(5, 2), 10);
        assert_eq!(binom(3, 4), 0);
        assert_eq!(binom(3, -1), 0);
        assert_eq!(binom(0, 0), 1);
        assert_eq!(binom(40, 20), 137846528820);
    }

    #[test]
    fn gating() {
        let q = QBracket::new(1, 4);
        assert_eq!(q.exceeds(0), Hypothesis::Met);
        assert_eq!(q.exceeds(2), Hypothesis::Unknown);
        assert_eq!(q.exceeds(4), Hypothesis::NotMet);
        let r = Record::ints("x", "", Hypothesis::Met, 1, Relation::Ge, 2);
        assert_eq!(r.verdict, Verdict::Fails);
        assert!(r.witness.is_some());
        let r = Record::ints("x", "", Hypothesis::Unknown, 1, Relation::Ge, 2);
        assert_eq!(r.verdict, Verdict::InconclusiveQ);
        assert!(!r.satisfied && r.witness.is_none());
    }
}
