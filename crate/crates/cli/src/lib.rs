//! The `qchar` command line: characters, evaluation, the PBW oracle and the
//! verification suites. Exit codes: 0 success, 1 mathematical or
//! verification failure, 2 usage error.

pub mod cache;
pub mod render;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use qchar_core::character::{chi_closed_numeric, chi_cn_recurrence, chi_polynomial, chi_series};
use qchar_core::{pbw, MultiPoly, Rational};

use crate::cache::ChiCache;
use crate::verify::{Bounds, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Rewriter guard for `hc` without `--force`.
pub const HC_MAX_RANK: usize = 2;
pub const HC_MAX_N: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Recurrence,
    Series,
    Closed,
}

#[derive(Debug, Parser)]
#[command(name = "qchar", version, about = "Central characters of the queer Lie superalgebra q(N)")]
pub struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,

    /// Directory for cached characters.
    #[arg(long, env = "QCHAR_CACHE_DIR", global = true)]
    pub cache: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// chi(c_{2m+1}) as a polynomial in l1..lN.
    Chi {
        #[arg(long = "N", value_parser = clap::value_parser!(u32).range(1..))]
        rank: u32,
        #[arg(long)]
        m: usize,
        /// Single engine; default runs series and checks it against the recurrence.
        #[arg(long, value_enum)]
        engine: Option<EngineArg>,
    },
    /// chi(c_1), chi(c_3), .., chi(c_{2 max_m + 1}).
    Series {
        #[arg(long = "N", value_parser = clap::value_parser!(u32).range(1..))]
        rank: u32,
        #[arg(long = "max-m", default_value_t = 3)]
        max_m: usize,
    },
    /// chi(c_{2m+1}) at a rational weight.
    Eval {
        /// Comma-separated rationals, e.g. `3,-1/2`.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        m: usize,
        /// Must match the length of --lambda when given.
        #[arg(long = "N")]
        rank: Option<usize>,
        #[arg(long, value_enum)]
        engine: Option<EngineArg>,
    },
    /// Harish-Chandra image of c_n computed by PBW normal ordering only.
    Hc {
        #[arg(long = "N", value_parser = clap::value_parser!(u32).range(1..))]
        rank: u32,
        #[arg(long)]
        n: usize,
        /// Lift the size guard.
        #[arg(long)]
        force: bool,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        /// Largest rank checked (each suite has its own default).
        #[arg(long = "N", value_parser = clap::value_parser!(u32).range(1..))]
        rank: Option<u32>,
        #[arg(long = "max-m")]
        max_m: Option<usize>,
        #[arg(long = "max-n")]
        max_n: Option<usize>,
        /// Worker threads; output does not depend on it.
        #[arg(long, default_value_t = default_jobs())]
        jobs: usize,
        /// Include the slow checks.
        #[arg(long)]
        long: bool,
    },
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// A command's failure, carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn math(message: impl ToString) -> Self {
        Failure {
            code: EXIT_FAILURE,
            message: message.to_string(),
        }
    }
}

type Outcome = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Chi { rank, m, engine } => cmd_chi(cli, *rank as usize, *m, *engine, out, err),
        Command::Series { rank, max_m } => cmd_series(cli, *rank as usize, *max_m, out),
        Command::Eval {
            lambda,
            m,
            rank,
            engine,
        } => cmd_eval(cli, lambda, *m, *rank, *engine, out),
        Command::Hc { rank, n, force } => cmd_hc(cli, *rank as usize, *n, *force, out),
        Command::Verify {
            suite,
            rank,
            max_m,
            max_n,
            jobs,
            long,
        } => {
            let bounds = Bounds {
                max_rank: rank.map(|r| r as usize),
                max_m: *max_m,
                max_n: *max_n,
                long: *long,
            };
            cmd_verify(cli, *suite, &bounds, *jobs, out, err)
        }
    }
}

fn io_fail(e: std::io::Error) -> Failure {
    Failure::math(format!("write failed: {e}"))
}

fn emit_poly(
    cli: &Cli,
    out: &mut dyn Write,
    rank: usize,
    m: usize,
    engine: &str,
    p: &MultiPoly,
) -> Result<(), Failure> {
    match cli.format {
        Format::Text => writeln!(out, "{p}"),
        Format::Json => writeln!(out, "{}", render::to_json_line(&render::chi_json(rank, m, engine, p))),
    }
    .map_err(io_fail)
}

fn cmd_chi(
    cli: &Cli,
    rank: usize,
    m: usize,
    engine: Option<EngineArg>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let (poly, name) = match engine {
        Some(EngineArg::Closed) => {
            return Err(Failure::usage(
                "the closed form is numeric only; use `eval --engine closed`",
            ))
        }
        Some(EngineArg::Recurrence) => (chi_cn_recurrence(m, rank).poly, "recurrence"),
        Some(EngineArg::Series) => {
            let all = chi_series(m, rank).map_err(Failure::math)?;
            (all[m].poly.clone(), "series")
        }
        None => {
            let cache = cli.cache.as_ref().map(ChiCache::new);
            if let Some(p) = cache.as_ref().and_then(|c| c.load(rank, m)) {
                let _ = writeln!(err, "cache hit: {}", cache.as_ref().unwrap().path(rank, m).display());
                (p, "series")
            } else {
                let p = chi_polynomial(m, rank).map_err(Failure::math)?.poly;
                if let Some(c) = &cache {
                    if let Err(e) = c.store(rank, m, "series", &p) {
                        let _ = writeln!(err, "warning: cache write failed: {e}");
                    }
                }
                (p, "series")
            }
        }
    };
    emit_poly(cli, out, rank, m, name, &poly)?;
    Ok(EXIT_OK)
}

fn cmd_series(cli: &Cli, rank: usize, max_m: usize, out: &mut dyn Write) -> Outcome {
    let all = chi_series(max_m, rank).map_err(Failure::math)?;
    for r in &all {
        emit_poly(cli, out, rank, r.m, "series", &r.poly)?;
    }
    Ok(EXIT_OK)
}

fn parse_lambda(text: &str) -> Result<Vec<Rational>, Failure> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<Rational>()
                .map_err(|e| Failure::usage(format!("bad --lambda entry {s:?}: {e}")))
        })
        .collect()
}

fn cmd_eval(
    cli: &Cli,
    lambda: &str,
    m: usize,
    rank: Option<usize>,
    engine: Option<EngineArg>,
    out: &mut dyn Write,
) -> Outcome {
    let point = parse_lambda(lambda)?;
    if let Some(r) = rank {
        if r != point.len() {
            return Err(Failure::usage(format!(
                "--N {r} but --lambda has {} entries",
                point.len()
            )));
        }
    }
    let rank = point.len();
    let (value, name) = match engine {
        Some(EngineArg::Closed) => (chi_closed_numeric(m, &point).map_err(Failure::math)?, "closed"),
        Some(EngineArg::Recurrence) => (
            chi_cn_recurrence(m, rank).poly.eval(&point).map_err(Failure::math)?,
            "recurrence",
        ),
        Some(EngineArg::Series) | None => (
            chi_polynomial(m, rank)
                .map_err(Failure::math)?
                .poly
                .eval(&point)
                .map_err(Failure::math)?,
            "series",
        ),
    };
    match cli.format {
        Format::Text => writeln!(out, "{value}"),
        Format::Json => {
            let doc = render::EvalJson {
                rank,
                m,
                engine: name.to_string(),
                lambda: point.iter().map(|x| x.to_string()).collect(),
                value: value.to_string(),
            };
            writeln!(out, "{}", render::to_json_line(&doc))
        }
    }
    .map_err(io_fail)?;
    Ok(EXIT_OK)
}

fn cmd_hc(cli: &Cli, rank: usize, n: usize, force: bool, out: &mut dyn Write) -> Outcome {
    if n % 2 == 0 {
        return Err(Failure::usage(format!("n must be odd (c_{n} vanishes identically)")));
    }
    if !force && (rank > HC_MAX_RANK || n > HC_MAX_N) {
        return Err(Failure::usage(format!(
            "hc is limited to N <= {HC_MAX_RANK}, n <= {HC_MAX_N}; pass --force to go further"
        )));
    }
    let p = pbw::hc_of_cn(n, rank).map_err(Failure::math)?;
    match cli.format {
        Format::Text => writeln!(out, "{p}"),
        Format::Json => {
            let doc = render::HcJson {
                rank,
                n,
                engine: "pbw".into(),
                coeffs: render::terms_json(&p),
            };
            writeln!(out, "{}", render::to_json_line(&doc))
        }
    }
    .map_err(io_fail)?;
    Ok(EXIT_OK)
}

fn cmd_verify(
    cli: &Cli,
    suite: Suite,
    bounds: &Bounds,
    jobs: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    if jobs == 0 {
        return Err(Failure::usage("--jobs must be at least 1"));
    }
    let report = verify::run_suite(suite, bounds, jobs);
    match cli.format {
        Format::Text => {
            for c in &report.cases {
                let tag = if c.passed { "PASS" } else { "FAIL" };
                writeln!(out, "{tag} {}: {}", c.id, c.detail).map_err(io_fail)?;
            }
            writeln!(
                out,
                "{}: {} of {} cases passed",
                report.suite,
                report.cases.len() - report.failures(),
                report.cases.len()
            )
            .map_err(io_fail)?;
        }
        Format::Json => {
            #[derive(serde::Serialize)]
            struct Doc<'a> {
                suite: &'a str,
                passed: bool,
                cases: &'a [verify::CaseResult],
            }
            let doc = Doc {
                suite: &report.suite,
                passed: report.passed(),
                cases: &report.cases,
            };
            writeln!(out, "{}", render::to_json_line(&doc)).map_err(io_fail)?;
        }
    }
    let _ = writeln!(err, "elapsed: {:.2?}", report.elapsed);
    Ok(if report.passed() { EXIT_OK } else { EXIT_FAILURE })
}

