//! `symstoch`: command-line front end for the symstoch library.

mod cache;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use symstoch::conjectures::{self, ConjectureId, ConjectureOptions, RankingSample, Verdict};
use symstoch::ehrhart;
use symstoch::error::Error;
use symstoch::geometry;
use symstoch::graphfactor::decompose;
use symstoch::par::Strategy;
use symstoch::suite;
use symstoch::symmat::{
    count_series, enumerate_points_with, CountMode, DilatePoint, Family, MatrixJson, SymIntMatrix,
};
use symstoch::toric::{
    self, verify_theorem13, Convention, GroebnerLimits, PointConfig, TermOrder, TieBreak,
};

use output::Format;

const EXIT_OK: u8 = 0;
const EXIT_FALSIFIED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_LIMIT: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "symstoch", version, about = "Exact Ehrhart, toric and decomposition data for symmetric doubly-stochastic polytopes")]
struct Cli {
    #[command(flatten)]
    config: ConfigArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Serialize)]
struct ConfigArgs {
    /// Matrix size.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Polytope family: S (line sums 2m), Sigma (line sums m) or P.
    #[arg(long, global = true, value_enum, default_value = "S")]
    family: FamilyArg,
    /// Dilation factor.
    #[arg(long, global = true)]
    m: Option<u32>,
    /// Term order convention: literal-def32, proof-consistent or refined.
    #[arg(long, global = true, default_value = "proof-consistent", value_parser = parse_convention)]
    convention: Convention,
    /// Variable tie-break among equal keys: ascending or descending.
    #[arg(long, global = true, default_value = "ascending", value_parser = parse_tie_break)]
    tie_break: TieBreak,
    /// How twos and zeros are counted: full-matrix or upper-triangle.
    #[arg(long, global = true, value_enum, default_value = "full-matrix")]
    count_mode: CountModeArg,
    /// Permit Gröbner computations over all lattice points at n = 4.
    #[arg(long, global = true)]
    allow_large: bool,
    #[arg(long, global = true, default_value_t = symstoch::symmat::DEFAULT_MAX_POINTS,
          value_parser = clap::value_parser!(u64).range(1..))]
    max_points: u64,
    #[arg(long, global = true, default_value_t = GroebnerLimits::default().max_basis as u64,
          value_parser = clap::value_parser!(u64).range(1..))]
    max_basis: u64,
    /// Wall-clock budget in seconds for Gröbner computations.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    time_budget: Option<u64>,
    /// Vertex-ideal check: visit this many random rankings instead of all.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    sample_rankings: Option<u64>,
    /// Seed for sampled rankings.
    #[arg(long, global = true, default_value_t = suite::SUITE_SEED)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Result cache directory; SYMSTOCH_CACHE_DIR is used when absent.
    #[arg(long, global = true)]
    #[serde(skip)]
    cache_dir: Option<PathBuf>,
    /// Skip the result cache.
    #[arg(long, global = true)]
    #[serde(skip)]
    no_cache: bool,
}

#[derive(Subcommand, Debug, Clone, Serialize)]
#[serde(rename_all = "kebab-case", tag = "command")]
enum Command {
    /// Count lattice points of the dilates 0..=m, or list those of dilate m.
    Points {
        #[arg(long)]
        list: bool,
    },
    /// h*-vector of S_n, Sigma_n or P_n.
    Hstar,
    /// Even and odd constituents of the Ehrhart quasipolynomial of Sigma_n.
    Quasi,
    /// Write a lattice point of m·S_n as a sum of m lattice points of S_n.
    Decompose {
        /// JSON file holding {"n": .., "rows": [[..], ..]} or bare rows; `-` reads stdin.
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// Reduced Gröbner basis of the toric ideal.
    Groebner {
        #[arg(value_enum)]
        points: PointSet,
    },
    /// Check the four Gröbner basis properties on the full configuration.
    VerifyThm13,
    /// Whether S_n is Gorenstein, with the interior witness.
    Gorenstein,
    /// The special simplex of S_n for even n.
    Simplex,
    /// Vertices of S_n with certificates for the other lattice points.
    Vertices,
    /// Evaluate a conjecture at the given n.
    Conjecture {
        #[arg(value_parser = parse_conjecture)]
        id: ConjectureId,
    },
    /// Run the acceptance battery.
    Suite,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
enum FamilyArg {
    #[value(name = "S", alias = "s")]
    S,
    #[value(name = "Sigma", alias = "sigma")]
    Sigma,
    #[value(name = "P", alias = "p")]
    P,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
enum CountModeArg {
    FullMatrix,
    UpperTriangle,
}

impl From<CountModeArg> for CountMode {
    fn from(c: CountModeArg) -> Self {
        match c {
            CountModeArg::FullMatrix => CountMode::FullMatrix,
            CountModeArg::UpperTriangle => CountMode::UpperTriangle,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
enum PointSet {
    Full,
    Vertices,
}

fn parse_convention(s: &str) -> Result<Convention, String> {
    match s.parse::<Convention>() {
        Ok(Convention::Custom) => Err("the custom convention has no command-line form".into()),
        Ok(c) => Ok(c),
        Err(e) => Err(e.to_string()),
    }
}

fn parse_tie_break(s: &str) -> Result<TieBreak, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_conjecture(s: &str) -> Result<ConjectureId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// What a command produced: a payload plus the exit code it implies.
struct Outcome {
    payload: Value,
    exit: u8,
    /// Lines for `--format text`, when the payload has a natural text form.
    text: Option<Vec<String>>,
    /// `(m, count)` rows for `--format csv`.
    table: Option<Vec<(u32, String)>>,
}

impl Outcome {
    fn ok(payload: Value) -> Self {
        Outcome {
            payload,
            exit: EXIT_OK,
            text: None,
            table: None,
        }
    }
}

/// A failure with its exit code and a JSON body for stderr.
struct Failure {
    exit: u8,
    body: Value,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (exit, kind) = match &e {
            Error::Invalid(_) | Error::Parity(_) | Error::Regularity { .. } => (EXIT_USAGE, "invalid-input"),
            Error::Falsification(_) | Error::Inconsistent(_) => (EXIT_FALSIFIED, "falsification"),
            Error::Capacity { .. } | Error::ResourceLimit(_) => (EXIT_LIMIT, "resource-limit"),
        };
        Failure {
            exit,
            body: json!({"error": kind, "message": e.to_string()}),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        exit: EXIT_USAGE,
        body: json!({"error": "usage", "message": msg.into()}),
    }
}

impl ConfigArgs {
    fn n(&self) -> Result<usize, Failure> {
        match self.n {
            Some(0) => Err(usage("--n must be positive")),
            Some(n) => Ok(n),
            None => Err(usage("--n is required for this command")),
        }
    }

    fn core_family(&self) -> Result<Family, Failure> {
        match self.family {
            FamilyArg::S => Ok(Family::S),
            FamilyArg::Sigma => Ok(Family::Sigma),
            FamilyArg::P => Err(usage("family P is only supported by `hstar`")),
        }
    }

    fn limits(&self) -> GroebnerLimits {
        GroebnerLimits {
            max_basis: usize::try_from(self.max_basis).unwrap_or(usize::MAX),
            time_budget: self.time_budget.map(Duration::from_secs),
            ..GroebnerLimits::default()
        }
    }

    fn conjecture_options(&self) -> ConjectureOptions {
        ConjectureOptions {
            allow_large: self.allow_large,
            limits: self.limits(),
            rankings: match self.sample_rankings {
                Some(count) => RankingSample::Random {
                    count: usize::try_from(count).unwrap_or(usize::MAX),
                    seed: self.seed,
                },
                None => RankingSample::All,
            },
            ..ConjectureOptions::default()
        }
    }

    fn order(&self, config: &PointConfig) -> Result<TermOrder, Failure> {
        Ok(TermOrder::new(
            config,
            self.convention,
            self.tie_break,
            self.count_mode.into(),
        )?)
    }

    fn gate_full(&self, n: usize) -> Result<(), Failure> {
        if n > 4 {
            return Err(usage("full-configuration Gröbner bases are limited to n <= 4"));
        }
        if n > 3 && !self.allow_large {
            return Err(usage("n = 4 over all lattice points needs --allow-large"));
        }
        Ok(())
    }
}

/// Everything that determines a command's output, hashed for the cache.
#[derive(Serialize)]
struct RunConfig<'a> {
    version: &'static str,
    config: &'a ConfigArgs,
    command: &'a Command,
    /// Contents of the input file, for commands that read one.
    input: Option<&'a str>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let body = json!({"error": "usage", "message": e.render().to_string().trim_end()});
            eprintln!("{body}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("{}", f.body);
            ExitCode::from(f.exit)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    let cfg = &cli.config;
    if cfg.format == Format::Csv && !matches!(cli.command, Command::Points { list: false } | Command::Hstar) {
        return Err(usage("--format csv is only available for `points` and `hstar` count tables"));
    }
    let input = match &cli.command {
        Command::Decompose { input } => Some(read_input(input)?),
        _ => None,
    };
    let cacheable = !matches!(cli.command, Command::Suite) && !cfg.no_cache;
    let store = if cacheable {
        cache::Store::open(cfg.cache_dir.clone())
    } else {
        None
    };
    let key = cache::key(&RunConfig {
        version: env!("CARGO_PKG_VERSION"),
        config: cfg,
        command: &cli.command,
        input: input.as_deref(),
    });
    let outcome = match store.as_ref().and_then(|s| s.get(&key)) {
        Some(hit) => hit,
        None => {
            let out = execute(cfg, &cli.command, input.as_deref())?;
            if let Some(s) = &store {
                s.put(&key, &out);
            }
            out
        }
    };
    output::emit(cfg.format, &outcome).map_err(|e| Failure {
        exit: EXIT_USAGE,
        body: json!({"error": "output", "message": e.to_string()}),
    })?;
    Ok(outcome.exit)
}

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    let read = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    };
    read.map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

/// Accepts `{"n": .., "rows": ..}` or a bare array of rows.
fn parse_matrix(text: &str) -> Result<SymIntMatrix, Failure> {
    let value: Value = serde_json::from_str(text).map_err(|e| {
        Failure {
            exit: EXIT_USAGE,
            body: json!({"error": "parse", "message": e.to_string(), "line": e.line(), "column": e.column()}),
        }
    })?;
    let parsed = if value.is_array() {
        serde_json::from_value::<Vec<Vec<u32>>>(value)
            .map_err(|e| e.to_string())
            .and_then(|rows| SymIntMatrix::from_rows(&rows).map_err(|e| e.to_string()))
    } else {
        serde_json::from_value::<MatrixJson>(value)
            .map_err(|e| e.to_string())
            .and_then(|m| SymIntMatrix::try_from(m).map_err(|e| e.to_string()))
    };
    parsed.map_err(|message| Failure {
        exit: EXIT_USAGE,
        body: json!({"error": "parse", "message": message}),
    })
}

fn big_rows<T: ToString>(values: &[T]) -> Vec<(u32, String)> {
    values
        .iter()
        .enumerate()
        .map(|(m, c)| (m as u32, c.to_string()))
        .collect()
}

fn execute(cfg: &ConfigArgs, command: &Command, input: Option<&str>) -> Result<Outcome, Failure> {
    match command {
        Command::Points { list } => {
            let n = cfg.n()?;
            let family = cfg.core_family()?;
            let m = cfg.m.unwrap_or(1);
            if *list {
                let pts = enumerate_points_with(n, m, family, cfg.max_points, Strategy::default())?;
                return Ok(Outcome::ok(json!({
                    "family": family.to_string(), "n": n, "m": m,
                    "count": pts.len(), "points": pts.points,
                })));
            }
            let counts = count_series(n, family, m, Strategy::default());
            let rows = big_rows(&counts);
            let payload = json!({
                "family": family.to_string(), "n": n,
                "counts": rows.iter().map(|(m, c)| json!({"m": m, "count": c})).collect::<Vec<_>>(),
            });
            Ok(Outcome {
                table: Some(rows),
                ..Outcome::ok(payload)
            })
        }
        Command::Hstar => {
            let n = cfg.n()?;
            match cfg.family {
                FamilyArg::P => {
                    let h = geometry::hstar_p(n)?;
                    let table = big_rows(&h.counts);
                    Ok(Outcome {
                        table: Some(table),
                        ..Outcome::ok(h.to_json())
                    })
                }
                f => {
                    let (h, family) = if f == FamilyArg::S {
                        (ehrhart::hstar_s(n)?, Family::S)
                    } else {
                        (ehrhart::hstar_sigma(n)?, Family::Sigma)
                    };
                    let upto = (h.dimension + 1) as u32;
                    let counts = count_series(n, family, upto, Strategy::default());
                    Ok(Outcome {
                        table: Some(big_rows(&counts)),
                        ..Outcome::ok(h.to_json())
                    })
                }
            }
        }
        Command::Quasi => Ok(Outcome::ok(ehrhart::quasipoly_sigma(cfg.n()?)?.to_json())),
        Command::Decompose { .. } => {
            let m = cfg.m.ok_or_else(|| usage("--m is required for decompose"))?;
            let matrix = parse_matrix(input.unwrap_or_default())?;
            let point = DilatePoint::new(matrix, m, Family::S)?;
            let d = decompose(&point)?;
            Ok(Outcome::ok(serde_json::to_value(&d).expect("decomposition serializes")))
        }
        Command::Groebner { points } => {
            let n = cfg.n()?;
            let config = match points {
                PointSet::Full => {
                    cfg.gate_full(n)?;
                    PointConfig::full(n)?
                }
                PointSet::Vertices => PointConfig::vertices(n)?,
            };
            let order = cfg.order(&config)?;
            let g = toric::toric_groebner_with(&config, &order, cfg.limits())?;
            let elements: Vec<Value> = g.elements.iter().map(|e| e.to_matrix_json(&config)).collect();
            let mut payload = g.to_json();
            payload["n"] = json!(n);
            payload["points"] = json!(config.points);
            payload["size"] = json!(g.len());
            payload["max_degree"] = json!(g.max_degree());
            payload["matrix_elements"] = json!(elements);
            Ok(Outcome::ok(payload))
        }
        Command::VerifyThm13 => {
            let n = cfg.n()?;
            cfg.gate_full(n)?;
            let config = PointConfig::full(n)?;
            let order = cfg.order(&config)?;
            let g = toric::toric_groebner_with(&config, &order, cfg.limits())?;
            let r = verify_theorem13(&g, &config);
            // Properties 1, 2 and 4 are claimed for every convention; property
            // 3 only for the one the proof uses.
            let claimed = r.p1.holds
                && r.p2.holds
                && r.p4.holds
                && (r.p3.holds || cfg.convention == Convention::LiteralDef32);
            let mut out = Outcome::ok(r.to_json());
            out.exit = if claimed { EXIT_OK } else { EXIT_FALSIFIED };
            Ok(out)
        }
        Command::Gorenstein => {
            let n = cfg.n()?;
            let payload = match geometry::gorenstein_witness(n) {
                Some((r, w)) => json!({"gorenstein": true, "witness": {"r": r, "matrix": w}}),
                None => json!({"gorenstein": false, "witness": null}),
            };
            Ok(Outcome::ok(payload))
        }
        Command::Simplex => {
            let s = geometry::special_simplex(cfg.n()?)?;
            s.validate()?;
            Ok(Outcome::ok(serde_json::to_value(&s).expect("simplex serializes")))
        }
        Command::Vertices => Ok(Outcome::ok(geometry::vertices(cfg.n()?)?.to_json())),
        Command::Conjecture { id } => {
            let n = cfg.n()?;
            let report = conjectures::run(*id, n, cfg.convention, &cfg.conjecture_options())?;
            let exit = match report.verdict {
                Verdict::Counterexample => EXIT_FALSIFIED,
                Verdict::ResourceLimit => EXIT_LIMIT,
                _ => EXIT_OK,
            };
            Ok(Outcome {
                exit,
                ..Outcome::ok(report.to_json())
            })
        }
        Command::Suite => {
            let results = suite::run_all();
            let lines: Vec<String> = results.iter().map(|r| r.summary_line()).collect();
            let passed = results.iter().all(|r| r.passed);
            Ok(Outcome {
                payload: suite::report_json(&results),
                exit: if passed { EXIT_OK } else { EXIT_FALSIFIED },
                text: Some(lines),
                table: None,
            })
        }
    }
}
