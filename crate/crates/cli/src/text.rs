use std::fmt::Write;

use hyperres::matroid::BettiTable;
use hyperres::positivity::{ChernSeries, GrassmannReport, PositivityReport, SchurValue, Verdict};
use hyperres::report::{FullReport, ResonanceSummary};
use hyperres::resonance::{CodimensionEvidence, MembershipResult};

fn seq(xs: &[i64]) -> String {
    xs.iter().map(i64::to_string).collect::<Vec<_>>().join(", ")
}

pub fn betti(b: &BettiTable, indecomposable: bool) -> String {
    format!(
        "h    = ({})\nb    = ({})\nbeta = ({})\nindecomposable: {indecomposable}\n",
        seq(&b.h),
        seq(&b.b),
        seq(&b.beta)
    )
}

pub fn membership(m: &MembershipResult) -> String {
    let dims: Vec<String> = m.dims.iter().map(usize::to_string).collect();
    format!("dims = ({})\n", dims.join(", "))
}

pub fn resonance(rs: &[ResonanceSummary]) -> String {
    let mut out = String::new();
    for r in rs {
        let _ = writeln!(
            out,
            "R^{}_{}: {} component(s), dims [{}], q in [{}, {}]",
            r.i,
            r.j,
            r.discovery.components.len(),
            r.discovery
                .components
                .iter()
                .map(|c| c.dim.to_string())
                .collect::<Vec<_>>()
                .join(", "),
            r.codim.q_lower,
            r.codim.q_upper
        );
    }
    out
}

pub fn positivity(p: &PositivityReport) -> String {
    let mut out = String::new();
    for r in &p.records {
        let verdict = match r.verdict {
            Verdict::Holds => "holds",
            Verdict::Fails => "FAILS",
            Verdict::HypothesisNotMet => "hypothesis not met",
            Verdict::InconclusiveQ => "inconclusive (q)",
        };
        let _ = writeln!(
            out,
            "{:<20} {:<24} {} {} {}  {verdict}{}",
            r.name,
            r.index,
            r.lhs,
            r.relation,
            r.rhs,
            if r.tight { " (tight)" } else { "" }
        );
    }
    let _ = writeln!(
        out,
        "{} holds, {} fails, {} hypothesis not met, {} inconclusive",
        p.count(Verdict::Holds),
        p.count(Verdict::Fails),
        p.count(Verdict::HypothesisNotMet),
        p.count(Verdict::InconclusiveQ)
    );
    out
}

pub fn schur(cs: &ChernSeries, values: &[SchurValue]) -> String {
    let coeffs: Vec<String> = cs.coeffs.iter().map(ToString::to_string).collect();
    let mut out = format!("c^({}) = ({}) truncated below {}\n", cs.j, coeffs.join(", "), cs.q_used);
    for v in values {
        let _ = writeln!(out, "s{:?} = {}", v.partition, v.value);
    }
    out
}

pub fn conjectures(codimension: Option<&CodimensionEvidence>, injectivity: &[GrassmannReport]) -> String {
    let mut out = String::new();
    if let Some(e) = codimension {
        let _ = writeln!(out, "codimension question: {:?} ({})", e.verdict, e.detail);
    }
    for g in injectivity {
        let _ = writeln!(
            out,
            "injectivity, i = {}: {:?} over {} samples ({} vanishing); count {} < {}: {:?}",
            g.i, g.verdict, g.trials, g.vanishing, g.q_sum_upper, g.bound, g.count_verdict
        );
    }
    out
}

pub fn report(r: &FullReport) -> String {
    let mut out = format!(
        "{} (d = {}, n = {}), seed {}\n",
        r.arrangement.name,
        r.betti.d(),
        r.betti.n(),
        r.seed
    );
    for w in &r.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    out += &betti(&r.betti, r.indecomposable);
    if let Some(d) = &r.diagnosis {
        let _ = writeln!(out, "{d}");
    }
    if let Some(c) = &r.complex {
        let _ = writeln!(
            out,
            "phi shapes {:?}, generic ranks {:?}",
            c.phi_shapes, c.generic_ranks
        );
    }
    out += &resonance(&r.resonance);
    out += &positivity(&r.positivity);
    out += &conjectures(r.probes.codimension.as_ref(), &r.probes.injectivity);
    out
}
