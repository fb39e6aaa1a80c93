//! Command-line frontend for `cplxinfo`.
//!
//! [`run`] parses arguments, dispatches to the library and writes either
//! aligned `key  value` lines or a single JSON object. Exit codes: 0 success
//! (or null retained), 1 usage error, 2 data error, 3 null rejected.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cplxinfo::{
    cd, ce, ce_monte_carlo, cm, gaussian_ce_asymptotic, perm_test, tv, Bandwidth, BetaChoice,
    CeEstimate, DegenerateCe, Distribution, KdeConfig, PermTestConfig,
};
use serde_json::Value;

pub mod input;
pub mod output;
pub mod table2;

use input::{parse_distribution, read_samples};
use output::{fmt_num, Report};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_DATA: u8 = 2;
pub const EXIT_REJECT: u8 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Data(String),
    #[error("{0}")]
    Io(#[from] io::Error),
}

impl From<cplxinfo::Error> for CliError {
    fn from(e: cplxinfo::Error) -> Self {
        CliError::Data(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "cplxinfo",
    version,
    about = "Complex entropy, divergence and metric for probability distributions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

const DIST_HELP: &str = "Distribution: inline JSON, a JSON file, or bern(p), normal(mu,sigma), uniform(a,b), laplace(mu,b), point(x)";

#[derive(Debug, Subcommand)]
enum Command {
    /// Complex entropy CE_beta(P).
    Ce(CeArgs),
    /// Complex divergence CD_beta(P || Q) = -ln |int_{supp p} p e^{i beta (p - q)}|.
    ///
    /// Only the support of P enters the integral. When supp P lies inside a
    /// region where Q is uniform, or Q vanishes on all of supp P, the value
    /// can be 0 even though P != Q: CD is not a strict divergence.
    Cd(PairArgs),
    /// Complex metric CM_beta(P, Q); beta = 0 gives total variation.
    Cm(PairArgs),
    /// Total variation distance.
    Tv(TvArgs),
    /// Leading-order stationary-phase value of CE_beta for Normal(0, sigma).
    AsymptoticCe(AsymptoticArgs),
    /// Permutation two-sample test with the complex metric as statistic.
    ///
    /// The p-value is #{k : T_k >= T_obs} / K. It is one-tailed in the
    /// statistic (large distances are evidence against H0) even though the
    /// construction is sometimes called two-sided: a distance already
    /// captures departures in every direction. Exit code 3 means H0 is
    /// rejected at --alpha.
    Twosample(TwosampleArgs),
    /// Monte-Carlo CE of Normal(0, sigma) over the 7 x 6 (beta, sigma) grid,
    /// with quadrature values alongside.
    Table2(Table2Args),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Method {
    /// Exact sum for PMFs, adaptive quadrature for densities.
    Quad,
    /// Monte-Carlo average over --samples draws.
    Mc,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Degenerate {
    Zero,
    One,
}

#[derive(Debug, Args)]
struct CeArgs {
    #[arg(long, help = DIST_HELP)]
    dist: String,
    #[arg(long)]
    beta: f64,
    #[arg(long, value_enum, default_value = "quad")]
    method: Method,
    #[arg(long, default_value_t = 10_000)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Value reported for a single-atom PMF.
    #[arg(long, value_enum, default_value = "one")]
    degenerate_ce: Degenerate,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct PairArgs {
    #[arg(long, help = DIST_HELP)]
    p: String,
    #[arg(long, help = DIST_HELP)]
    q: String,
    #[arg(long)]
    beta: f64,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct TvArgs {
    #[arg(long, help = DIST_HELP)]
    p: String,
    #[arg(long, help = DIST_HELP)]
    q: String,
    /// Accepted for symmetry with cd/cm; total variation does not depend on it.
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct AsymptoticArgs {
    #[arg(long)]
    sigma: f64,
    #[arg(long)]
    beta: f64,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Clone, Copy)]
enum AutoOr {
    Auto,
    Value(f64),
}

fn parse_auto_or(s: &str) -> Result<AutoOr, String> {
    if s.eq_ignore_ascii_case("auto") {
        return Ok(AutoOr::Auto);
    }
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(AutoOr::Value(v)),
        _ => Err(format!("expected `auto` or a positive number, got {s:?}")),
    }
}

#[derive(Debug, Args)]
struct TwosampleArgs {
    /// First sample: one value per line, or CSV with a `value` column.
    #[arg(long)]
    x: PathBuf,
    /// Second sample, same format.
    #[arg(long)]
    y: PathBuf,
    #[arg(long, value_parser = parse_auto_or, default_value = "auto")]
    beta: AutoOr,
    #[arg(long, default_value_t = cplxinfo::twosample::DEFAULT_PERMUTATIONS)]
    permutations: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = cplxinfo::twosample::DEFAULT_ALPHA)]
    alpha: f64,
    /// Use empirical PMFs instead of kernel density estimates.
    #[arg(long)]
    discrete: bool,
    #[arg(long, value_parser = parse_auto_or, default_value = "auto")]
    bandwidth: AutoOr,
    /// KDE grid points.
    #[arg(long, default_value_t = cplxinfo::kde::DEFAULT_GRID_POINTS)]
    grid: usize,
    #[arg(long)]
    json: bool,
    /// Write the permutation statistics as CSV.
    #[arg(long)]
    null_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct Table2Args {
    /// Monte-Carlo draws per cell (at least 100).
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    json: bool,
}

/// Runs the tool on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.command {
        Command::Ce(a) => run_ce(a, out),
        Command::Cd(a) => run_cd(a, out),
        Command::Cm(a) => run_cm(a, out),
        Command::Tv(a) => run_tv(a, out),
        Command::AsymptoticCe(a) => run_asymptotic(a, out),
        Command::Twosample(a) => run_twosample(a, out),
        Command::Table2(a) => table2::run(a.samples, a.seed, a.json, out).map(|()| EXIT_OK),
    };
    match result.and_then(|code| out.flush().map(|()| code).map_err(CliError::from)) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DATA
        }
    }
}

fn spec_value(spec: &cplxinfo::DistSpec) -> Value {
    serde_json::to_value(spec).unwrap_or(Value::Null)
}

fn run_ce(a: CeArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let (dist, spec) = parse_distribution(&a.dist)?;
    let degenerate = match a.degenerate_ce {
        Degenerate::Zero => DegenerateCe::Zero,
        Degenerate::One => DegenerateCe::One,
    };
    let est: CeEstimate = match (a.method, &dist) {
        (Method::Quad, Distribution::Discrete(p)) => {
            cplxinfo::entropy::ce_discrete_with(p, a.beta, degenerate)?
        }
        (Method::Quad, _) => ce(&dist, a.beta)?,
        (Method::Mc, _) => ce_monte_carlo(&dist, a.beta, a.samples, a.seed)?,
    };
    let mut r = Report::new("ce");
    r.raw("dist", spec_value(&spec))
        .num("beta", est.beta)
        .text("method", est.method.as_str())
        .num("value", est.value)
        .opt_num("stderr", est.stderr);
    match a.method {
        Method::Mc => r.int("samples", a.samples as u64).int("seed", a.seed),
        Method::Quad => r.raw("samples", Value::Null).raw("seed", Value::Null),
    };
    if dist.is_discrete() {
        r.text(
            "degenerate_ce",
            match degenerate {
                DegenerateCe::Zero => "zero",
                DegenerateCe::One => "one",
            },
        );
    }
    r.write(a.json, out)?;
    Ok(EXIT_OK)
}

fn parse_pair(p: &str, q: &str) -> Result<(Distribution, Value, Distribution, Value), CliError> {
    let (pd, ps) = parse_distribution(p)?;
    let (qd, qs) = parse_distribution(q)?;
    Ok((pd, spec_value(&ps), qd, spec_value(&qs)))
}

fn run_cd(a: PairArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let (p, ps, q, qs) = parse_pair(&a.p, &a.q)?;
    let r = cd(&p, &q, a.beta)?;
    Report::new("cd")
        .raw("p", ps)
        .raw("q", qs)
        .num("beta", r.beta)
        .num("value", r.value)
        .num("amplitude_modulus", r.amplitude_modulus)
        .flag("infinite", r.infinite)
        .write(a.json, out)?;
    Ok(EXIT_OK)
}

fn run_cm(a: PairArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let (p, ps, q, qs) = parse_pair(&a.p, &a.q)?;
    let r = cm(&p, &q, a.beta)?;
    Report::new("cm")
        .raw("p", ps)
        .raw("q", qs)
        .num("beta", r.beta)
        .num("value", r.value)
        .write(a.json, out)?;
    Ok(EXIT_OK)
}

fn run_tv(a: TvArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let (p, ps, q, qs) = parse_pair(&a.p, &a.q)?;
    let v = tv(&p, &q)?;
    Report::new("tv")
        .raw("p", ps)
        .raw("q", qs)
        .num("value", v)
        .write(a.json, out)?;
    Ok(EXIT_OK)
}

fn run_asymptotic(a: AsymptoticArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let r = gaussian_ce_asymptotic(a.sigma, a.beta)?;
    Report::new("asymptotic-ce")
        .num("sigma", a.sigma)
        .num("beta", a.beta)
        .num("value", r.value)
        .num("lambda", r.lambda)
        .num("peak_phase", r.lambda * a.beta)
        .flag("regime_ok", r.regime_ok)
        .write(a.json, out)?;
    Ok(EXIT_OK)
}

fn run_twosample(a: TwosampleArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let x = read_samples(&a.x)?;
    let y = read_samples(&a.y)?;
    let cfg = PermTestConfig {
        beta: match a.beta {
            AutoOr::Auto => BetaChoice::Auto,
            AutoOr::Value(b) => BetaChoice::Fixed(b),
        },
        permutations: a.permutations,
        seed: a.seed,
        alpha: a.alpha,
        kde: KdeConfig {
            bandwidth: match a.bandwidth {
                AutoOr::Auto => Bandwidth::Auto,
                AutoOr::Value(h) => Bandwidth::Fixed(h),
            },
            grid_points: a.grid,
            ..KdeConfig::default()
        },
        discrete: a.discrete,
    };
    let r = perm_test(&x, &y, &cfg)?;

    if let Some(path) = &a.null_out {
        let mut f = io::BufWriter::new(
            File::create(path).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?,
        );
        writeln!(f, "permutation,t_perm")?;
        for (k, t) in r.t_perm.iter().enumerate() {
            writeln!(f, "{},{}", k + 1, fmt_num(*t))?;
        }
        f.flush()?;
    }

    let mut rep = Report::new("twosample");
    rep.text("x", x.label())
        .text("y", y.label())
        .int("m", r.m as u64)
        .int("n", r.n as u64)
        .text("mode", if a.discrete { "discrete" } else { "kde" })
        .text(
            "beta_choice",
            match a.beta {
                AutoOr::Auto => "auto",
                AutoOr::Value(_) => "fixed",
            },
        )
        .num("beta_used", r.beta_used)
        .opt_num("bandwidth", r.bandwidth);
    match r.grid {
        Some((lo, hi, points)) => rep
            .num("grid_lo", lo)
            .num("grid_hi", hi)
            .int("grid_points", points as u64),
        None => rep
            .raw("grid_lo", Value::Null)
            .raw("grid_hi", Value::Null)
            .raw("grid_points", Value::Null),
    };
    rep.int("permutations", r.permutations as u64)
        .int("seed", r.seed)
        .num("alpha", r.alpha)
        .num("t_obs", r.t_obs)
        .num("p_value", r.p_value)
        .num("p_value_adjusted", r.p_value_adjusted)
        .flag("reject", r.reject);
    rep.write(a.json, out)?;
    Ok(if r.reject { EXIT_REJECT } else { EXIT_OK })
}
