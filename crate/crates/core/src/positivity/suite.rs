use num_integer::Roots;

use super::chern::{chern_coefficients, chern_series, QProvenance};
use super::schur::{partitions, schur_value};
use super::{Hypothesis, PositivityReport, QBracket, Record, Relation};
use crate::error::{Error, Result};
use crate::linalg::Rat;
use crate::matroid::BettiTable;
use crate::resonance::ProbeVerdict;

/// Schur positivity, vanishing, degree, rank and log-concavity statements
/// for c^(j)_t, truncated below q = codim R^j.
///
/// Claims that need i < q use q_lower, so they only shrink when q is
/// uncertain. Claims in the window [q_lower, q_upper) are recorded as
/// inconclusive-q. For j = n - 2 the hypothesis q > 1 comes from the bracket
/// or, failing that, from the probe verdict.
pub fn chern_suite(b: &BettiTable, j: usize, q: QBracket, probe: Option<ProbeVerdict>) -> Result<PositivityReport> {
    let n = b.n();
    if b.beta(n as i64 - 1) == 0 {
        return Err(Error::Decomposable);
    }
    if j == 0 || j + 1 >= n {
        return Err(Error::OutOfRange {
            what: "degree j",
            value: j as i64,
            range: format!("[1, {}]", n as i64 - 2),
        });
    }
    let mut gate = Hypothesis::Met;
    let mut q_low = q.lower.max(0);
    if j + 2 == n {
        gate = match (q.exceeds(1), probe) {
            (h @ (Hypothesis::Met | Hypothesis::Probe), _) => h,
            (Hypothesis::NotMet, _) | (_, Some(ProbeVerdict::Contradicts)) => Hypothesis::NotMet,
            (_, Some(ProbeVerdict::Supports)) => Hypothesis::Probe,
            _ => Hypothesis::Unknown,
        };
        if gate == Hypothesis::Probe {
            q_low = q_low.max(2);
        }
    }
    let q_up = q.upper.max(q_low);
    let beta_next = b.beta(j as i64 + 1);
    let tag = |s: String| format!("j={j} {s}");
    let mut out = Vec::new();

    let len = (q_up.max(beta_next + 2) + 1) as usize;
    let full = chern_coefficients(b, j, len)?;
    let c = |i: i64| -> Rat {
        if i < 0 || i >= q_low {
            Rat::zero()
        } else {
            full[i as usize].clone()
        }
    };

    if q_low >= 1 {
        let provenance = if q.is_exact() {
            QProvenance::Exact
        } else {
            QProvenance::TheoryLowerBound
        };
        let cs = chern_series(b, j, q_low as usize, provenance)?;
        for w in 1..q_low as usize {
            for lambda in partitions(w) {
                let v = schur_value(&lambda, &cs)?;
                out.push(Record::compare(
                    "schur",
                    tag(format!("lambda={lambda:?}")),
                    gate,
                    &v,
                    Relation::Ge,
                    &Rat::zero(),
                ));
            }
        }
    }

    for i in beta_next + 1..q_up {
        let h = if i < q_low { gate } else { gate.and(Hypothesis::Unknown) };
        out.push(Record::compare(
            "chern-vanishing",
            tag(format!("c_{i}")),
            h,
            &full[i as usize],
            Relation::Eq,
            &Rat::zero(),
        ));
    }

    let top = (0..q_low).rev().find(|&i| !c(i).is_zero()).unwrap_or(0);
    out.push(Record::compare(
        "chern-degree",
        tag("q > max{i : c_i != 0}".into()),
        gate,
        &Rat::from(q_low),
        Relation::Gt,
        &Rat::from(top),
    ));

    let jj = j as i64;
    let at_upper = beta_next >= q_up - jj - 1;
    let at_lower = beta_next >= q_low - jj - 1;
    let (h, rhs) = if at_upper || !at_lower {
        (gate, if at_upper { q_up - jj - 1 } else { q_low - jj - 1 })
    } else {
        (gate.and(Hypothesis::Unknown), q_up - jj - 1)
    };
    out.push(Record::ints(
        "rank-codim",
        tag(format!("beta_{}", j + 1)),
        h,
        beta_next,
        Relation::Ge,
        rhs,
    ));

    for i in 1..q_low {
        let lhs = c(i).pow(2);
        let rhs = &c(i - 1) * &c(i + 1);
        out.push(Record::compare(
            "log-concave",
            tag(format!("c_{i}")),
            gate,
            &lhs,
            Relation::Ge,
            &rhs,
        ));
    }
    Ok(PositivityReport { records: out })
}

/// Lower bounds on b_2 (n = 4, 5) and b_3 (n = 5) from c_1 >= 0 and
/// c_2 >= 0 in degrees 2 and 3. `q[i]` brackets codim R^i.
pub fn b2_b3_bounds(b: &BettiTable, q: &[QBracket]) -> Result<PositivityReport> {
    let n = b.n();
    if !(4..=5).contains(&n) || q.len() < n - 1 {
        return Err(Error::OutOfRange {
            what: "dimension n",
            value: n as i64,
            range: "{4, 5} with q known in degrees 2 and 3".into(),
        });
    }
    let d = b.d() as i64;
    let (b2, b3) = (b.b(2), b.b(3));
    let mut out = vec![Record::ints(
        "b2-linear",
        "b_2",
        q[2].exceeds(1),
        b2,
        Relation::Ge,
        2 * d - 5,
    )];
    // b_2 >= 2d + sqrt(8d-31)/2 - 11/2  <=>  2b_2 - 4d + 11 >= sqrt(8d-31)
    out.push(root_bound(
        "b2-quadratic",
        "b_2",
        q[2].exceeds(2),
        b2,
        2 * b2 - 4 * d + 11,
        8 * d - 31,
        4 * d - 11,
    ));
    if n == 5 {
        out.push(Record::ints(
            "b3-linear",
            "b_3",
            q[3].exceeds(1),
            b3,
            Relation::Ge,
            2 * b2 - 3 * d + 7,
        ));
        // b_3 >= 13/2 - 3d + 2b_2 + sqrt(73-24d+8b_2)/2
        out.push(root_bound(
            "b3-quadratic",
            "b_3",
            q[3].exceeds(2),
            b3,
            2 * b3 - 13 + 6 * d - 4 * b2,
            73 - 24 * d + 8 * b2,
            13 - 6 * d + 4 * b2,
        ));
    }
    Ok(PositivityReport { records: out })
}

/// lhs >= (p + sqrt(r)) / 2, decided as l >= 0 and l^2 >= r with l = 2 lhs - p.
fn root_bound(name: &str, index: &str, gate: Hypothesis, lhs: i64, l: i64, r: i64, p: i64) -> Record {
    let hyp = gate.and(Hypothesis::from_bool(r >= 0));
    let rhs = match r {
        r if r >= 0 && r.sqrt() * r.sqrt() == r => Rat::new(p + r.sqrt(), 2).to_string(),
        _ => format!("{} + sqrt({r})/2", Rat::new(p, 2)),
    };
    let (satisfied, tight) = if r < 0 {
        (false, false)
    } else {
        let (l, r) = (l as i128, r as i128);
        (l >= 0 && l * l >= r, l >= 0 && l * l == r)
    };
    Record::build(
        name,
        index.to_string(),
        hyp,
        Relation::Ge,
        lhs.to_string(),
        rhs,
        satisfied,
        tight,
    )
}
