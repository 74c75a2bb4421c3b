//! Command-line front end for the `hurwitz-hodge` engine.
//!
//! Exit codes: 0 success, 2 invalid flags or configuration, 3 a failed
//! verification or check, 4 an unreadable or corrupt cache file.

pub mod cache;
pub mod records;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hurwitz_hodge::hodge::{closed_keys, cross_check_report, total_via_exp, total_via_sine};
use hurwitz_hodge::partitions::{
    binomial_derivative_sum, enumerate, lemma1_sum, lemma2_expected, lemma2_sum,
};
use hurwitz_hodge::rational::to_pq;
use hurwitz_hodge::{Engine, EngineConfig, Family, IntegralTable, Localization, Path, Rational};
use num_traits::Zero;

use crate::cache::{CacheError, Lookup};
use crate::records::{select, to_csv, to_json, to_pretty, TableHeader};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;
pub const EXIT_CACHE: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "hurwitz-hodge",
    version,
    about = "Exact Hurwitz-Hodge integral tables and certification suites"
)]
pub struct Cli {
    /// Cap on the truncation order 2G+2 (or --order for corollary checks).
    #[arg(long, global = true, env = "HH_MAX_ORDER", default_value_t = 64)]
    pub max_order: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit raw integral values for one family.
    Table(TableArgs),
    /// Run a certification suite.
    #[command(subcommand)]
    Check(CheckCommand),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    D,
    V,
    T,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::D => Family::D,
            FamilyArg::V => Family::V,
            FamilyArg::T => Family::T,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub degree: u32,
    #[arg(long)]
    pub gmax: u32,
    #[arg(long, value_enum, ignore_case = true)]
    pub family: FamilyArg,
    /// Only emit this index (D and V families).
    #[arg(long)]
    pub i: Option<u32>,
    #[arg(long, value_enum, default_value = "pretty")]
    pub format: Format,
    /// Compute closed forms and recursions and require equality.
    #[arg(long)]
    pub verify: bool,
    /// Persist the closed-form table here and reuse it on matching runs.
    #[arg(long)]
    pub cache: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum CheckCommand {
    /// Closed forms against recursions, repackaging, row sums and residuals.
    All {
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        gmax: u32,
        #[arg(long)]
        imax: usize,
    },
    /// The alternating split sum vanishes on every nonempty partition.
    Lemma1 {
        #[arg(long)]
        nmax: u32,
    },
    /// The weighted split sum is |eta|+1 on single parts and 0 otherwise.
    Lemma2 {
        #[arg(long)]
        nmax: u32,
    },
    /// The exponential and trigonometric total series agree.
    Corollary {
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        order: usize,
    },
}

/// Parses `argv` and runs it, writing data to `out` and diagnostics to
/// `err`. Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    let result = match &cli.command {
        Command::Table(args) => run_table(args, cli.max_order, out),
        Command::Check(cmd) => run_check(cmd, cli.max_order, out),
    };
    let _ = out.flush();
    match result {
        Ok(()) => EXIT_OK,
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message);
            failure.code
        }
    }
}

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

    fn mismatch(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_MISMATCH,
            message: message.into(),
        }
    }
}

impl From<CacheError> for Failure {
    fn from(e: CacheError) -> Self {
        Failure {
            code: EXIT_CACHE,
            message: e.to_string(),
        }
    }
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure {
        code: 1,
        message: format!("write failed: {e}"),
    }
}

fn engine_for(degree: u32, gmax: u32, max_order: usize) -> Result<Engine, Failure> {
    let cfg = EngineConfig::new(degree, gmax).map_err(|e| Failure::usage(e.to_string()))?;
    if cfg.order() > max_order {
        return Err(Failure::usage(format!(
            "order 2*gmax+2 = {} exceeds --max-order {max_order}",
            cfg.order()
        )));
    }
    Ok(Engine::new(cfg))
}

fn has_closed_keys(table: &IntegralTable, gmax: u32) -> bool {
    let keys = closed_keys(gmax);
    table.len() == keys.len() && table.iter().zip(&keys).all(|((k, _), want)| k == want)
}

pub fn run_table(args: &TableArgs, max_order: usize, out: &mut dyn Write) -> Result<(), Failure> {
    let family: Family = args.family.into();
    if family == Family::T && args.i.is_some() {
        return Err(Failure::usage("--i does not apply to family T"));
    }
    let engine = engine_for(args.degree, args.gmax, max_order)?;
    let degree = args.degree;
    let compute = || {
        engine
            .closed_table()
            .map_err(|e| Failure::mismatch(e.to_string()))
    };

    let closed = match &args.cache {
        None => compute()?,
        Some(path) => {
            match cache::load(path, degree, args.gmax, |t| has_closed_keys(t, args.gmax))? {
                Lookup::Hit(table) => table,
                Lookup::Miss => {
                    let fresh = compute()?;
                    cache::store(path, degree, args.gmax, &fresh)?;
                    fresh
                }
            }
        }
    };

    let mut records = select(&closed, degree, family, args.gmax, args.i);
    if args.verify {
        let recursed = Localization::new(&engine).tabulate_all();
        for r in &mut records {
            let key = r.key().map_err(Failure::usage)?;
            let other = recursed.value(&key);
            if other.as_ref() != Some(&r.value) {
                let shown = other.map(|v| to_pq(&v)).unwrap_or_else(|| "missing".into());
                let at = match r.i {
                    Some(i) => format!("(i={i}, g={})", r.g),
                    None => format!("(g={})", r.g),
                };
                return Err(Failure::mismatch(format!(
                    "verification mismatch at {key} {at}: closed form {} vs recursion {shown}",
                    to_pq(&r.value)
                )));
            }
            r.path = Path::BothAgree;
        }
    }

    let header = TableHeader {
        degree,
        gmax: args.gmax,
        family,
        i: args.i,
        verify: args.verify,
    };
    let text = match args.format {
        Format::Csv => to_csv(&records),
        Format::Json => to_json(&header, &records),
        Format::Pretty => to_pretty(&header, &records),
    };
    out.write_all(text.as_bytes()).map_err(io_failure)
}

pub fn run_check(cmd: &CheckCommand, max_order: usize, out: &mut dyn Write) -> Result<(), Failure> {
    match *cmd {
        CheckCommand::All { degree, gmax, imax } => {
            let engine = engine_for(degree, gmax, max_order)?;
            let report =
                cross_check_report(&engine, imax).map_err(|e| Failure::usage(e.to_string()))?;
            write!(out, "{report}").map_err(io_failure)?;
            match report.first_failure() {
                None => Ok(()),
                Some(c) => Err(Failure::mismatch(format!(
                    "{} failed: {}",
                    c.name,
                    c.failure.as_deref().unwrap_or("")
                ))),
            }
        }
        CheckCommand::Lemma1 { nmax } => lemma_suite(1, nmax, out),
        CheckCommand::Lemma2 { nmax } => lemma_suite(2, nmax, out),
        CheckCommand::Corollary { degree, order } => {
            if degree < 2 {
                return Err(Failure::usage(format!(
                    "degree must be at least 2, got {degree}"
                )));
            }
            if order > max_order {
                return Err(Failure::usage(format!(
                    "--order {order} exceeds --max-order {max_order}"
                )));
            }
            let a = total_via_exp(degree, order);
            let b = total_via_sine(degree, order);
            writeln!(out, "corollary degree={degree} order={order}").map_err(io_failure)?;
            match a.first_mismatch(&b) {
                None => {
                    writeln!(
                        out,
                        "[PASS] (1/d)exp(d D_1) = d^(d-1) sin^d(u/2)/sin^d(du/2) ({} coefficients)",
                        order + 1
                    )
                    .map_err(io_failure)?;
                    writeln!(out, "result: PASS").map_err(io_failure)
                }
                Some(n) => {
                    writeln!(out, "[FAIL] first differing coefficient: u^{n}")
                        .map_err(io_failure)?;
                    writeln!(out, "result: FAIL").map_err(io_failure)?;
                    Err(Failure::mismatch(format!("total series differ at u^{n}")))
                }
            }
        }
    }
}

fn lemma_suite(which: u8, nmax: u32, out: &mut dyn Write) -> Result<(), Failure> {
    writeln!(out, "lemma{which} nmax={nmax}").map_err(io_failure)?;
    let mut partitions = 0usize;
    let mut splits = 0usize;
    let mut failure: Option<String> = None;
    for n in 1..=nmax {
        let etas = enumerate(n);
        let mut bad = None;
        for eta in &etas {
            splits += eta.splits().len();
            let (got, want) = if which == 1 {
                (lemma1_sum(eta), Rational::zero())
            } else {
                let got = lemma2_sum(eta).expect("enumerated partitions of n >= 1 are nonempty");
                (got, lemma2_expected(eta))
            };
            if bad.is_none() && got != want {
                bad = Some(format!(
                    "eta = {eta}: sum {} != {}",
                    to_pq(&got),
                    to_pq(&want)
                ));
            }
        }
        partitions += etas.len();
        let tag = if bad.is_none() { "PASS" } else { "FAIL" };
        write!(out, "[{tag}] n={n}: {} partitions", etas.len()).map_err(io_failure)?;
        if let Some(b) = &bad {
            write!(out, "; counterexample {b}").map_err(io_failure)?;
        }
        writeln!(out).map_err(io_failure)?;
        if failure.is_none() {
            failure = bad;
        }
    }
    if which == 2 {
        let bad_m = (2..=30).find(|&m| !binomial_derivative_sum(m).is_zero());
        let tag = if bad_m.is_none() { "PASS" } else { "FAIL" };
        writeln!(
            out,
            "[{tag}] sum_k (-1)^(m-k) k/(k!(m-k)!) = 0 for 2 <= m <= 30"
        )
        .map_err(io_failure)?;
        if failure.is_none() {
            failure = bad_m.map(|m| format!("binomial derivative sum nonzero at m = {m}"));
        }
    }
    let verdict = if failure.is_none() { "PASS" } else { "FAIL" };
    writeln!(
        out,
        "result: {verdict} ({partitions} partitions, {splits} splits)"
    )
    .map_err(io_failure)?;
    match failure {
        None => Ok(()),
        Some(f) => Err(Failure::mismatch(f)),
    }
}
