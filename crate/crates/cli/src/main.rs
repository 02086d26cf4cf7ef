mod text;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hyperres::linalg::rat::parse_vector;
use hyperres::matroid::{is_indecomposable, MatroidData};
use hyperres::os::aomoto;
use hyperres::positivity::{
    b2_b3_bounds, chern_series, grassmann_probe, schur_values, verify_lower_bounds, QBracket, QProvenance,
};
use hyperres::report::{
    analyze, load_essential, q_brackets, resonance_at, AnalysisConfig, Source, DEFAULT_DEPTH, DEFAULT_GRASSMANN_TRIALS,
    DEFAULT_SAMPLES, SCHEMA_VERSION,
};
use hyperres::resonance::{codimension_probe, fitting_equations, membership, reduced_equations, DEFAULT_SPAN_POINTS};
use hyperres::Error;

#[derive(Parser)]
#[command(
    name = "hyperres",
    version,
    about = "Resonance varieties and Betti-number positivity for hyperplane arrangements"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline and print the report.
    Analyze(Common),
    /// Whitney numbers and Betti numbers of the complement.
    Betti(Common),
    /// Equations of R^i_j: minors of phi_i, or reduced minors of phi_1.
    Equations {
        #[command(flatten)]
        common: Common,
        #[arg(long, short, required_unless_present = "reduced")]
        i: Option<usize>,
        #[arg(long, short, default_value_t = 1)]
        j: usize,
        /// Divide the maximal minors of phi_1 minus a column by that variable.
        #[arg(long)]
        reduced: bool,
        /// Column to delete, 1-based.
        #[arg(long, default_value_t = 1)]
        col: usize,
    },
    /// dim H^i(H(U), v) for a point v of H^1(U).
    Membership {
        #[command(flatten)]
        common: Common,
        /// Comma-separated rationals, length b_1.
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
    },
    /// Discover linear components of R^i_j and bracket their codimension.
    Resonance(Common),
    /// Dowling–Wilson, Brylawski and binomial lower bounds, plus b_2/b_3 bounds.
    Bounds(Common),
    /// Chern series c^(j) and its Schur values.
    Schur {
        #[command(flatten)]
        common: Common,
        #[arg(long, short)]
        j: usize,
        /// Truncation codimension; defaults to the certified lower bound.
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        max_weight: Option<usize>,
    },
    /// Evidence on the codimension and injectivity questions.
    Conjectures(Common),
}

#[derive(Args, Clone)]
struct Common {
    /// Arrangement JSON file or generator name (generic, braid, ...).
    source: Option<String>,
    #[arg(long, conflicts_with_all = ["source", "generator"])]
    input: Option<String>,
    #[arg(long, conflicts_with = "source")]
    generator: Option<String>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    /// Braid size.
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    max_degree: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_DEPTH)]
    depth: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    samples: usize,
    #[arg(long, default_value_t = DEFAULT_SPAN_POINTS)]
    span_points: usize,
    #[arg(long, default_value_t = DEFAULT_GRASSMANN_TRIALS)]
    trials: usize,
    /// Extra seed vector for discovery (repeatable).
    #[arg(long = "user-seed-vector", allow_hyphen_values = true)]
    user_seed_vector: Vec<String>,
    /// Include wall-clock timings in the report.
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

impl Common {
    fn config(&self) -> Result<AnalysisConfig, Error> {
        let name = self
            .input
            .clone()
            .or_else(|| self.source.clone())
            .or_else(|| self.generator.clone())
            .ok_or_else(|| Error::Parse("no input: give a file, a generator name or --input".into()))?;
        let source = if self.input.is_some() {
            Source::File { path: name.into() }
        } else if self.generator.is_some() {
            Source::Generator {
                name,
                d: self.d,
                n: self.n,
                m: self.m,
            }
        } else {
            Source::parse(&name, self.d, self.n, self.m)
        };
        let mut cfg = AnalysisConfig::new(source, self.seed);
        cfg.max_degree = self.max_degree;
        cfg.depth = self.depth;
        cfg.samples = self.samples;
        cfg.span_points = self.span_points;
        cfg.grassmann_trials = self.trials;
        cfg.timing = self.timing;
        cfg.user_seeds = self
            .user_seed_vector
            .iter()
            .map(|s| parse_vector(s))
            .collect::<Result<_, _>>()?;
        Ok(cfg)
    }
}

/// Output plus whether it records a theorem failure.
struct Outcome {
    value: Value,
    text: String,
    failed: bool,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let format = match &cli.command {
        Command::Analyze(c)
        | Command::Betti(c)
        | Command::Resonance(c)
        | Command::Bounds(c)
        | Command::Conjectures(c) => c.format,
        Command::Equations { common, .. } | Command::Membership { common, .. } | Command::Schur { common, .. } => {
            common.format
        }
    };
    match run(cli.command) {
        Ok(out) => {
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.value).expect("json")),
                Format::Text => print!("{}", out.text),
            }
            if out.failed {
                eprintln!("error: a theorem bound failed; see the report");
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_input_error() {
                ExitCode::from(2)
            } else {
                ExitCode::from(3)
            }
        }
    }
}

fn envelope(seed: u64, body: Value) -> Value {
    let mut v = json!({ "schema_version": SCHEMA_VERSION, "seed": seed });
    if let (Value::Object(head), Value::Object(rest)) = (&mut v, body) {
        head.extend(rest);
    }
    v
}

fn run(command: Command) -> Result<Outcome, Error> {
    match command {
        Command::Analyze(common) => {
            let report = analyze(&common.config()?)?;
            Ok(Outcome {
                text: text::report(&report),
                failed: report.has_failures(),
                value: serde_json::to_value(&report)?,
            })
        }
        Command::Betti(common) => {
            let cfg = common.config()?;
            let (a, warnings) = load_essential(&cfg.source, cfg.seed)?;
            let m = MatroidData::build(&a)?;
            let betti = m.betti()?;
            let indecomposable = is_indecomposable(&m, &betti)?;
            Ok(Outcome {
                text: text::betti(&betti, indecomposable),
                value: envelope(
                    cfg.seed,
                    json!({ "warnings": warnings, "betti": betti, "indecomposable": indecomposable }),
                ),
                failed: false,
            })
        }
        Command::Equations {
            common,
            i,
            j,
            reduced,
            col,
        } => {
            let cfg = common.config()?;
            let (a, _) = load_essential(&cfg.source, cfg.seed)?;
            let c = aomoto(&a)?;
            let polys = if reduced {
                if col == 0 {
                    return Err(Error::OutOfRange {
                        what: "column",
                        value: 0,
                        range: format!("[1, {}]", c.nvars()),
                    });
                }
                reduced_equations(&c, col - 1)?
            } else {
                fitting_equations(&c, i.unwrap_or(1), j)?
            };
            let list: Vec<String> = polys.iter().map(|p| p.to_string()).collect();
            Ok(Outcome {
                text: list.iter().map(|p| format!("{p}\n")).collect(),
                value: envelope(
                    cfg.seed,
                    json!({ "i": if reduced { 1 } else { i.unwrap_or(1) }, "j": if reduced { 1 } else { j },
                            "reduced": reduced, "column": reduced.then_some(col),
                            "count": list.len(), "equations": list }),
                ),
                failed: false,
            })
        }
        Command::Membership { common, vector } => {
            let cfg = common.config()?;
            let (a, _) = load_essential(&cfg.source, cfg.seed)?;
            let c = aomoto(&a)?;
            let v = parse_vector(&vector)?;
            let m = membership(&c, &v)?;
            let memberships: Vec<Value> = (0..c.n())
                .flat_map(|i| (1..=cfg.depth).map(move |j| (i, j)))
                .map(|(i, j)| json!({ "i": i, "j": j, "member": m.in_resonance(i, j) }))
                .collect();
            Ok(Outcome {
                text: text::membership(&m),
                value: envelope(cfg.seed, json!({ "membership": m, "resonance": memberships })),
                failed: false,
            })
        }
        Command::Resonance(common) => {
            let cfg = common.config()?;
            let (a, _) = load_essential(&cfg.source, cfg.seed)?;
            let c = aomoto(&a)?;
            let top = cfg.max_degree.unwrap_or(c.n() - 1).min(c.n() - 1);
            let mut out = Vec::new();
            let mut previous = Vec::new();
            for i in 1..=top {
                let mut depth_one = Vec::new();
                for j in 1..=cfg.depth.min(c.b(i)) {
                    let s = resonance_at(&c, i, j, &previous, &cfg)?;
                    if j == 1 {
                        depth_one = s.discovery.components.clone();
                    }
                    out.push(s);
                }
                previous = depth_one;
            }
            Ok(Outcome {
                text: text::resonance(&out),
                value: envelope(cfg.seed, json!({ "resonance": out })),
                failed: false,
            })
        }
        Command::Bounds(common) => {
            let cfg = common.config()?;
            let (a, _) = load_essential(&cfg.source, cfg.seed)?;
            let m = MatroidData::build(&a)?;
            let betti = m.betti()?;
            let indecomposable = is_indecomposable(&m, &betti)?;
            let mut rep = verify_lower_bounds(&betti, indecomposable);
            if indecomposable && (4..=5).contains(&betti.n()) {
                let c = aomoto(&a)?;
                let (q, _) = q_brackets(&c, &cfg)?;
                rep.extend(b2_b3_bounds(&betti, &q)?);
            }
            Ok(Outcome {
                text: text::positivity(&rep),
                failed: rep.has_failures(),
                value: envelope(cfg.seed, json!({ "betti": betti, "positivity": rep })),
            })
        }
        Command::Schur {
            common,
            j,
            q,
            max_weight,
        } => {
            let cfg = common.config()?;
            let (a, _) = load_essential(&cfg.source, cfg.seed)?;
            let m = MatroidData::build(&a)?;
            let betti = m.betti()?;
            let (q_used, prov) = match q {
                Some(q) => (q, QProvenance::Exact),
                None => {
                    let c = aomoto(&a)?;
                    let (qs, _) = q_brackets(&c, &cfg)?;
                    let b = qs.get(j).copied().unwrap_or(QBracket::exact(1));
                    let prov = if b.is_exact() {
                        QProvenance::Exact
                    } else {
                        QProvenance::TheoryLowerBound
                    };
                    (b.lower.max(1) as usize, prov)
                }
            };
            let cs = chern_series(&betti, j, q_used, prov)?;
            let w = max_weight.unwrap_or(q_used - 1);
            let values = schur_values(&cs, w)?;
            Ok(Outcome {
                text: text::schur(&cs, &values),
                value: envelope(cfg.seed, json!({ "chern": cs, "schur": values })),
                failed: false,
            })
        }
        Command::Conjectures(common) => {
            let cfg = common.config()?;
            let (a, _) = load_essential(&cfg.source, cfg.seed)?;
            let c = aomoto(&a)?;
            let n = c.n();
            let (q, reports) = q_brackets(&c, &cfg)?;
            let codimension = if n >= 3 {
                Some(codimension_probe(&c, &reports[n - 3])?)
            } else {
                None
            };
            let injectivity = (2..n)
                .map(|i| grassmann_probe(&c, &q, i, cfg.grassmann_trials, cfg.seed ^ i as u64))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Outcome {
                text: text::conjectures(codimension.as_ref(), &injectivity),
                value: envelope(
                    cfg.seed,
                    json!({ "q": q, "codimension": codimension, "injectivity": injectivity }),
                ),
                failed: false,
            })
        }
    }
}
