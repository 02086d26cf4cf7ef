//! The full analysis pipeline and its serializable report.

use std::path::PathBuf;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Rat;
use crate::matroid::arrangement::{Arrangement, ArrangementFile};
use crate::matroid::{generators, is_indecomposable, BettiTable, MatroidData};
use crate::os::{aomoto, verify_complex, AomotoComplex};
use crate::positivity::{
    b2_b3_bounds, chern_series, chern_suite, grassmann_probe, verify_lower_bounds, ChernSeries, GrassmannReport,
    PositivityReport, QBracket, QProvenance,
};
use crate::resonance::{
    codim_report, codimension_probe, discover, in_resonance, propagation_check, CodimReport, CodimensionEvidence,
    Discovery, LinearComponent, PropagationReport, DEFAULT_SPAN_POINTS,
};
use crate::sample::random_vector;

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_SAMPLES: usize = 100;
pub const DEFAULT_DEPTH: usize = 2;
pub const DEFAULT_GRASSMANN_TRIALS: usize = 20;

/// Where the arrangement comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Source {
    File {
        path: PathBuf,
    },
    Generator {
        name: String,
        d: Option<usize>,
        n: Option<usize>,
        m: Option<usize>,
    },
}

impl Source {
    /// A path if one exists on disk or ends in `.json`, a generator otherwise.
    pub fn parse(s: &str, d: Option<usize>, n: Option<usize>, m: Option<usize>) -> Source {
        let path = PathBuf::from(s);
        if path.exists() || s.ends_with(".json") {
            Source::File { path }
        } else {
            Source::Generator {
                name: s.to_string(),
                d,
                n,
                m,
            }
        }
    }

    pub fn load(&self, seed: u64) -> Result<(Arrangement, Vec<String>)> {
        match self {
            Source::File { path } => Arrangement::load(path),
            Source::Generator { name, d, n, m } => {
                let a = match name.as_str() {
                    "generic" => {
                        let (d, n) = d
                            .zip(*n)
                            .ok_or_else(|| Error::Parse("generator `generic` needs --d and --n".into()))?;
                        generators::generic(d, n, seed)?
                    }
                    "braid" if m.is_some() => generators::braid_essential(m.unwrap_or(4)),
                    other => generators::named(other).ok_or_else(|| {
                        Error::Parse(format!(
                            "unknown generator `{other}` (expected generic, {})",
                            generators::NAMED_FIXTURES.join(", ")
                        ))
                    })?,
                };
                Ok((a, Vec::new()))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisConfig {
    pub source: Source,
    pub seed: u64,
    /// Largest degree i analysed; defaults to n - 1.
    pub max_degree: Option<usize>,
    /// Largest depth j analysed.
    pub depth: usize,
    pub samples: usize,
    pub span_points: usize,
    pub grassmann_trials: usize,
    pub user_seeds: Vec<Vec<Rat>>,
    /// Record wall-clock timings (breaks byte reproducibility).
    pub timing: bool,
}

impl AnalysisConfig {
    pub fn new(source: Source, seed: u64) -> AnalysisConfig {
        AnalysisConfig {
            source,
            seed,
            max_degree: None,
            depth: DEFAULT_DEPTH,
            samples: DEFAULT_SAMPLES,
            span_points: DEFAULT_SPAN_POINTS,
            grassmann_trials: DEFAULT_GRASSMANN_TRIALS,
            user_seeds: Vec::new(),
            timing: false,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ComplexDigest {
    pub phi_shapes: Vec<(usize, usize)>,
    pub generic_ranks: Vec<usize>,
    pub expected_ranks: Vec<i64>,
    pub compositions_zero: Vec<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ResonanceSummary {
    pub i: usize,
    pub j: usize,
    pub discovery: Discovery,
    pub codim: CodimReport,
    /// Random ambient points tested and how many were members.
    pub ambient_samples: usize,
    pub ambient_members: usize,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Probes {
    pub codimension: Option<CodimensionEvidence>,
    pub injectivity: Vec<GrassmannReport>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Timing {
    pub stages: Vec<(String, u128)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FullReport {
    pub schema_version: u32,
    pub version: String,
    pub seed: u64,
    pub arrangement: ArrangementFile,
    pub warnings: Vec<String>,
    pub betti: BettiTable,
    pub indecomposable: bool,
    pub diagnosis: Option<String>,
    pub complex: Option<ComplexDigest>,
    pub resonance: Vec<ResonanceSummary>,
    /// q brackets for R^i = R^i_1, i = 0..n-1.
    pub q: Vec<QBracket>,
    pub propagation: Option<PropagationReport>,
    pub chern: Vec<ChernSeries>,
    pub positivity: PositivityReport,
    pub probes: Probes,
    pub timing: Option<Timing>,
}

impl FullReport {
    pub fn has_failures(&self) -> bool {
        self.positivity.has_failures()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

struct Clock {
    on: bool,
    last: Instant,
    timing: Timing,
}

impl Clock {
    fn lap(&mut self, stage: &str) {
        if self.on {
            let now = Instant::now();
            self.timing
                .stages
                .push((stage.to_string(), (now - self.last).as_millis()));
            self.last = now;
        }
    }
}

/// Load the source, essentializing it (with a warning) when needed.
pub fn load_essential(source: &Source, seed: u64) -> Result<(Arrangement, Vec<String>)> {
    let (a, mut warnings) = source.load(seed)?;
    if a.is_essential() {
        return Ok((a, warnings));
    }
    warnings.push(format!(
        "arrangement has rank {} < n = {}; essentialized",
        a.rank(),
        a.n()
    ));
    Ok((a.essentialize(), warnings))
}

/// Load, verify, discover, bracket, propagate and run every inequality.
pub fn analyze(cfg: &AnalysisConfig) -> Result<FullReport> {
    let mut clock = Clock {
        on: cfg.timing,
        last: Instant::now(),
        timing: Timing::default(),
    };
    let (a, warnings) = load_essential(&cfg.source, cfg.seed)?;
    let m = MatroidData::build(&a)?;
    let betti = m.betti()?;
    let indecomposable = is_indecomposable(&m, &betti)?;
    clock.lap("matroid");

    let mut report = FullReport {
        schema_version: SCHEMA_VERSION,
        version: env!("CARGO_PKG_VERSION").to_string(),
        seed: cfg.seed,
        arrangement: a.to_file(),
        warnings,
        betti: betti.clone(),
        indecomposable,
        diagnosis: None,
        complex: None,
        resonance: Vec::new(),
        q: Vec::new(),
        propagation: None,
        chern: Vec::new(),
        positivity: verify_lower_bounds(&betti, indecomposable),
        probes: Probes::default(),
        timing: None,
    };
    if !indecomposable {
        report.diagnosis = Some(format!(
            "beta_{} = 0: the arrangement is decomposable; resonance and positivity suites skipped",
            betti.n().saturating_sub(1)
        ));
        report.timing = cfg.timing.then_some(clock.timing);
        return Ok(report);
    }

    let c = aomoto(&a)?;
    let check = verify_complex(&c, cfg.seed);
    report.complex = Some(ComplexDigest {
        phi_shapes: c.phis.iter().map(|p| (p.rows(), p.cols())).collect(),
        generic_ranks: check
            .sampled_ranks
            .iter()
            .map(|r| r.iter().copied().max().unwrap_or(0))
            .collect(),
        expected_ranks: check.expected_ranks.clone(),
        compositions_zero: check.compositions_zero.clone(),
    });
    clock.lap("complex");

    let n = c.n();
    let top = cfg.max_degree.unwrap_or(n - 1).min(n - 1);
    let mut by_degree: Vec<Vec<LinearComponent>> = vec![Vec::new()];
    let mut q = vec![QBracket::exact(betti.d() as i64 - 1)];
    let mut previous: Vec<LinearComponent> = Vec::new();
    for i in 1..=top {
        for j in 1..=cfg.depth.min(c.b(i)) {
            let summary = resonance_at(&c, i, j, &previous, cfg)?;
            if j == 1 {
                by_degree.push(summary.discovery.components.clone());
                q.push(QBracket {
                    lower: summary.codim.q_lower,
                    upper: summary.codim.q_upper,
                    probe: summary.codim.pencil_gcd_degree == Some(0)
                        && summary.codim.q_lower > summary.codim.theory.lower,
                });
            }
            report.resonance.push(summary);
        }
        previous = by_degree[i].clone();
    }
    report.q = q.clone();
    clock.lap("resonance");

    report.propagation = Some(propagation_check(&c, &by_degree, 10, cfg.seed)?);
    clock.lap("propagation");

    if n >= 3 && n - 2 <= top {
        let rep = report
            .resonance
            .iter()
            .find(|r| r.i == n - 2 && r.j == 1)
            .map(|r| r.codim.clone())
            .expect("degree n-2 analysed");
        report.probes.codimension = Some(codimension_probe(&c, &rep)?);
    }
    let probe = report.probes.codimension.as_ref().map(|e| e.verdict);
    for j in 1..n.saturating_sub(1) {
        if j >= q.len() {
            break;
        }
        let p = if j + 2 == n { probe } else { None };
        report.positivity.extend(chern_suite(&betti, j, q[j], p)?);
        if q[j].lower >= 1 {
            let prov = if q[j].is_exact() {
                QProvenance::Exact
            } else {
                QProvenance::TheoryLowerBound
            };
            report.chern.push(chern_series(&betti, j, q[j].lower as usize, prov)?);
        }
    }
    if (4..=5).contains(&n) && q.len() >= n - 1 {
        report.positivity.extend(b2_b3_bounds(&betti, &q)?);
    }
    for i in 2..n.min(q.len() + 1) {
        report
            .probes
            .injectivity
            .push(grassmann_probe(&c, &q, i, cfg.grassmann_trials, cfg.seed ^ i as u64)?);
    }
    clock.lap("positivity");
    report.timing = cfg.timing.then_some(clock.timing);
    Ok(report)
}

/// Discovery, bracket and ambient membership scan for one (i, j).
pub fn resonance_at(
    c: &AomotoComplex,
    i: usize,
    j: usize,
    previous: &[LinearComponent],
    cfg: &AnalysisConfig,
) -> Result<ResonanceSummary> {
    let disc = discover(c, i, j, &cfg.user_seeds, previous, cfg.span_points, cfg.seed)?;
    let codim = codim_report(c, &disc, cfg.seed)?;
    let whole = disc.dim_lower() == c.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(disc.rng_seed.rotate_left(17));
    let points: Vec<Vec<Rat>> = (0..cfg.samples).map(|_| random_vector(&mut rng, c.nvars())).collect();
    let members: Vec<Result<bool>> = crate::par::map(&points, |v| in_resonance(c, i, j, v));
    let mut ambient_members = 0;
    for m in members {
        if m? {
            ambient_members += 1;
        }
    }
    if whole != (ambient_members == cfg.samples) || (!whole && ambient_members > 0) {
        return Err(Error::Consistency(format!(
            "R^{i}_{j}: {ambient_members}/{} random points are members but discovery found dimension {}",
            cfg.samples,
            disc.dim_lower()
        )));
    }
    Ok(ResonanceSummary {
        i,
        j,
        discovery: disc,
        codim,
        ambient_samples: cfg.samples,
        ambient_members,
    })
}

/// q brackets for R^0..R^top at depth 1, without the rest of the pipeline.
pub fn q_brackets(c: &AomotoComplex, cfg: &AnalysisConfig) -> Result<(Vec<QBracket>, Vec<CodimReport>)> {
    let n = c.n();
    let mut q = vec![QBracket::exact(c.betti().d() as i64 - 1)];
    let mut reports = Vec::new();
    let mut previous: Vec<LinearComponent> = Vec::new();
    for i in 1..n {
        let disc = discover(c, i, 1, &cfg.user_seeds, &previous, cfg.span_points, cfg.seed)?;
        let rep = codim_report(c, &disc, cfg.seed)?;
        q.push(QBracket {
            lower: rep.q_lower,
            upper: rep.q_upper,
            probe: rep.pencil_gcd_degree == Some(0) && rep.q_lower > rep.theory.lower,
        });
        previous = disc.components;
        reports.push(rep);
    }
    Ok((q, reports))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(name: &str) -> AnalysisConfig {
        AnalysisConfig::new(Source::parse(name, None, None, None), 42)
    }

    #[test]
    fn braid_pipeline() {
        let r = analyze(&cfg("braid")).unwrap();
        assert_eq!(r.betti.b, vec![1, 5, 6]);
        let r11 = r.resonance.iter().find(|s| (s.i, s.j) == (1, 1)).unwrap();
        assert_eq!(r11.discovery.components.len(), 4);
        assert!(!r.has_failures());
        assert_eq!(
            r.q[1],
            QBracket {
                lower: 2,
                upper: 3,
                probe: true
            }
        );
        assert_eq!(r.probes.injectivity.len(), 1);
    }

    #[test]
    fn decomposable_is_diagnosed() {
        let r = analyze(&cfg("decomposable")).unwrap();
        assert!(!r.indecomposable);
        assert!(r.diagnosis.is_some());
        assert!(r.resonance.is_empty() && !r.has_failures());
    }

    #[test]
    fn deterministic_json() {
        let a = analyze(&cfg("two-triple-points")).unwrap().to_json();
        let b = analyze(&cfg("two-triple-points")).unwrap().to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn unknown_generator() {
        assert!(matches!(cfg("nonsense").source.load(0), Err(Error::Parse(_))));
        let g = AnalysisConfig::new(Source::parse("generic", None, Some(3), None), 1);
        assert!(g.source.load(0).is_err());
    }
}
