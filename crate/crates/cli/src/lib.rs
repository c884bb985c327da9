//! Command-line front end: argument validation, command dispatch and
//! rendering of tables and reports as JSON, CSV or text.

mod render;

use std::fmt;
use std::io::{self, IsTerminal, Write};
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use glaisher_core::glaisher::{
    density_report, epsilon, gf_bj_lhs, gf_c, gf_d, gf_regular, p_polynomial, verify, EpsilonRoute,
    RegularForm, Theorem, VerifyOptions,
};
use glaisher_core::partitions::{count_table, Family, FamilySpec};
use glaisher_core::series::Count;

pub use render::{CountRows, DensityJson, ExpandRows, VerifyJson};

pub const DEFAULT_PRECISION: usize = 200;
pub const DEFAULT_N_MAX: usize = 200;
/// Hard ceiling on `--n-max`, `--precision` and `--x`.
pub const CEILING: usize = 5000;

/// Process exit codes.
pub const EXIT_PASS: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Count,
    Expand,
    Verify,
    Density,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Text,
}

#[derive(Parser, Debug)]
#[command(
    name = "glaisher",
    version,
    about = "Exact partition counts and q-series identity checks"
)]
pub struct Args {
    /// count | expand | verify | density
    #[arg(value_enum)]
    pub command: Command,

    #[arg(long)]
    pub m: Option<usize>,

    /// Partition family: A, B, Bj, C or D
    #[arg(long)]
    pub family: Option<String>,

    /// Residue class for the Bj family
    #[arg(long)]
    pub j: Option<usize>,

    #[arg(long = "n-max")]
    pub n_max: Option<usize>,

    #[arg(long)]
    pub precision: Option<usize>,

    /// Summation limit for the Bj-lhs series (default: infinite)
    #[arg(long = "N-sum")]
    pub n_sum: Option<usize>,

    /// Epsilon route: definition, triangular, qbinomial, identity, closed3
    #[arg(long)]
    pub route: Option<String>,

    /// Series to expand: A, B, Bj-lhs, C, D, epsilon, P
    #[arg(long)]
    pub series: Option<String>,

    /// T1.2, E1.4, T1.3, T1.4, T1.5, T1.6, T1.8, T1.9 or C1.10
    #[arg(long)]
    pub theorem: Option<String>,

    /// Scan bound for density
    #[arg(long)]
    pub x: Option<usize>,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write output here instead of standard output
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    A,
    B,
    BjLhs,
    C,
    D,
    Epsilon,
    P,
}

impl SeriesKind {
    fn parse(s: &str) -> Result<Self, UsageError> {
        Ok(match s {
            "A" => SeriesKind::A,
            "B" => SeriesKind::B,
            "Bj-lhs" => SeriesKind::BjLhs,
            "C" => SeriesKind::C,
            "D" => SeriesKind::D,
            "epsilon" => SeriesKind::Epsilon,
            "P" => SeriesKind::P,
            other => return Err(UsageError(format!("unknown series {other:?}"))),
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            SeriesKind::A => "A",
            SeriesKind::B => "B",
            SeriesKind::BjLhs => "Bj-lhs",
            SeriesKind::C => "C",
            SeriesKind::D => "D",
            SeriesKind::Epsilon => "epsilon",
            SeriesKind::P => "P",
        }
    }
}

/// A validated command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Task {
    Count {
        spec: FamilySpec,
        n_max: usize,
    },
    Expand {
        kind: SeriesKind,
        m: usize,
        precision: usize,
        route: EpsilonRoute,
        n_sum: Count,
    },
    Verify {
        theorem: Theorem,
        m: usize,
        opts: VerifyOptions,
    },
    Density {
        m: usize,
        x: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub task: Task,
    pub format: Format,
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

impl From<glaisher_core::Error> for UsageError {
    fn from(e: glaisher_core::Error) -> Self {
        UsageError(e.to_string())
    }
}

fn within_ceiling(name: &str, v: usize) -> Result<usize, UsageError> {
    if v > CEILING {
        Err(UsageError(format!(
            "--{name} {v} exceeds the ceiling {CEILING}"
        )))
    } else {
        Ok(v)
    }
}

fn reject(flag: &str, present: bool, command: &str) -> Result<(), UsageError> {
    if present {
        Err(UsageError(format!("--{flag} is not accepted by {command}")))
    } else {
        Ok(())
    }
}

impl RunConfig {
    pub fn from_args(args: &Args) -> Result<Self, UsageError> {
        let m = || args.m.ok_or_else(|| UsageError("--m is required".into()));
        let task = match args.command {
            Command::Count => {
                reject("theorem", args.theorem.is_some(), "count")?;
                reject("series", args.series.is_some(), "count")?;
                let family: Family = args
                    .family
                    .as_deref()
                    .ok_or_else(|| UsageError("--family is required".into()))?
                    .parse()?;
                let spec = FamilySpec::new(family, m()?, args.j)?;
                let n_max = within_ceiling("n-max", args.n_max.unwrap_or(DEFAULT_N_MAX))?;
                Task::Count { spec, n_max }
            }
            Command::Expand => {
                reject("theorem", args.theorem.is_some(), "expand")?;
                let kind = SeriesKind::parse(
                    args.series
                        .as_deref()
                        .ok_or_else(|| UsageError("--series is required".into()))?,
                )?;
                let m = m()?;
                if m < 2 {
                    return Err(UsageError(format!("--m must be at least 2, got {m}")));
                }
                let route = match &args.route {
                    Some(r) => {
                        if kind != SeriesKind::Epsilon {
                            return Err(UsageError(
                                "--route applies to --series epsilon only".into(),
                            ));
                        }
                        r.parse::<EpsilonRoute>()?
                    }
                    None => EpsilonRoute::Triangular,
                };
                if !route.valid_for(m) {
                    return Err(UsageError(format!(
                        "route {route} is not available for m = {m}"
                    )));
                }
                let n_sum = args.n_sum.map_or(Count::Infinite, Count::Finite);
                let precision =
                    within_ceiling("precision", args.precision.unwrap_or(DEFAULT_PRECISION))?;
                Task::Expand {
                    kind,
                    m,
                    precision,
                    route,
                    n_sum,
                }
            }
            Command::Verify => {
                let theorem: Theorem = args
                    .theorem
                    .as_deref()
                    .ok_or_else(|| UsageError("--theorem is required".into()))?
                    .parse()?;
                let m = m()?;
                if m < 2 {
                    return Err(UsageError(format!("--m must be at least 2, got {m}")));
                }
                if theorem.requires_m3() && m != 3 {
                    return Err(UsageError(format!("{theorem} requires --m 3")));
                }
                let range = args.n_max.or(args.precision).unwrap_or(DEFAULT_N_MAX);
                let opts = VerifyOptions {
                    n_max: within_ceiling("n-max", range)?,
                    n_sum: args.n_sum.unwrap_or(VerifyOptions::default().n_sum),
                };
                Task::Verify { theorem, m, opts }
            }
            Command::Density => {
                let m = m()?;
                if m < 2 {
                    return Err(UsageError(format!("--m must be at least 2, got {m}")));
                }
                let x = args.x.ok_or_else(|| UsageError("--x is required".into()))?;
                if x == 0 {
                    return Err(UsageError("--x must be at least 1".into()));
                }
                Task::Density {
                    m,
                    x: within_ceiling("x", x)?,
                }
            }
        };
        Ok(RunConfig {
            task,
            format: args.format,
            out: args.out.clone(),
        })
    }
}

/// Rendered output plus the exit code it implies.
pub struct Outcome {
    pub body: String,
    pub exit_code: i32,
}

fn color_enabled(cfg: &RunConfig) -> bool {
    cfg.format == Format::Text
        && cfg.out.is_none()
        && std::env::var_os("NO_COLOR").is_none()
        && io::stdout().is_terminal()
}

/// Run a validated configuration. Errors here are mathematical failures
/// (for example a non-integer coefficient) and map to exit code 1.
pub fn execute(cfg: &RunConfig) -> Result<Outcome, glaisher_core::Error> {
    let fmt = cfg.format;
    match &cfg.task {
        Task::Count { spec, n_max } => {
            let table = count_table(*spec, *n_max);
            Ok(Outcome {
                body: render::count(&table, fmt),
                exit_code: EXIT_PASS,
            })
        }
        Task::Expand {
            kind,
            m,
            precision,
            route,
            n_sum,
        } => {
            let (m, n) = (*m, *precision);
            let series = match kind {
                SeriesKind::A => gf_regular(m, RegularForm::AProduct, n)?,
                SeriesKind::B => gf_regular(m, RegularForm::BProduct, n)?,
                SeriesKind::BjLhs => gf_bj_lhs(m, *n_sum, n)?,
                SeriesKind::C => gf_c(m, n)?,
                SeriesKind::D => gf_d(m, n)?,
                SeriesKind::Epsilon => epsilon(m, n, *route)?,
                SeriesKind::P => p_polynomial(m)?,
            };
            let route = (*kind == SeriesKind::Epsilon).then_some(*route);
            let rows = ExpandRows::new(kind.name(), m, route, &series);
            Ok(Outcome {
                body: render::expand(&rows, fmt),
                exit_code: EXIT_PASS,
            })
        }
        Task::Verify { theorem, m, opts } => {
            let report = verify(*theorem, *m, *opts)?;
            let exit_code = if report.passed() {
                EXIT_PASS
            } else {
                EXIT_MISMATCH
            };
            Ok(Outcome {
                body: render::verify(&report, fmt, color_enabled(cfg)),
                exit_code,
            })
        }
        Task::Density { m, x } => {
            let stats = density_report(*m, *x)?;
            let exit_code = if stats.bound_satisfied {
                EXIT_PASS
            } else {
                EXIT_MISMATCH
            };
            Ok(Outcome {
                body: render::density(&stats, fmt),
                exit_code,
            })
        }
    }
}

/// Full pipeline from parsed arguments to an exit code; output goes to
/// `--out` or `stdout`, diagnostics to `stderr`.
pub fn run(args: &Args, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let cfg = match RunConfig::from_args(args) {
        Ok(cfg) => cfg,
        Err(e) => {
            let _ = writeln!(stderr, "glaisher: {e}");
            return EXIT_USAGE;
        }
    };
    let outcome = match execute(&cfg) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "glaisher: {e}");
            return EXIT_MISMATCH;
        }
    };
    let written = match &cfg.out {
        Some(path) => std::fs::write(path, &outcome.body),
        None => stdout.write_all(outcome.body.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "glaisher: cannot write output: {e}");
        return EXIT_USAGE;
    }
    outcome.exit_code
}
