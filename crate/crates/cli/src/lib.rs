//! Command-line reports: Jost-zero catalogs, the height and prime comparison
//! series, the normalization factors at a chosen index, and a full
//! validation run.

mod checks;

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use jostzeta::io::{
    parse_prime_table, parse_zero_table, read_catalog_file, write_catalog_file, write_csv_file,
    write_json_file, write_series_csv_file, ComparisonRow, DataError, SeriesRow, ZeroCatalog,
};
use jostzeta::jost::{
    asymptotic_seed, find_zero, find_zeros, jost_reduced, Barrier, JostError, JostZero, RootConfig,
};
use jostzeta::number_theory::{
    find_zeta_zeros, first_primes, prime_asymptotic, zeta_height_asymptotic, NumberTheoryError,
    PrimeTable, ZetaZeroTable,
};
use jostzeta::spectral::{ResonanceObservables, SpectralError};

pub use checks::{validate, Check, ValidationReport};

/// Below this index the normalization factors compare quantities that are
/// still far from their asymptotic regime.
pub const SMALL_N_CAVEAT_BELOW: usize = 1000;

pub const DEFAULT_TOL: f64 = 1e-12;

#[derive(Debug, Parser)]
#[command(name = "jostzeta", version, about = "Jost-function zeros against zeta zeros and primes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Opts,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    /// Jost-zero catalog with resonance observables as comparison CSV (or
    /// JSON for a `.json` output). Ground truth columns are filled only from
    /// `--zeta-file` / `--prime-file`.
    Zeros,
    /// Height and prime series: fig1a (n,t_hat,t_asym,t_true), fig1b
    /// (n,p_hat,p_asym,p_true) and optionally the full comparison table.
    Figure1,
    /// Normalization factors Nz = t_n/t̂_n and Np = p_n/p̂_n as JSON.
    Normalize,
    /// Run every invariant check and emit a JSON summary.
    Validate,
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Command::Zeros => "zeros",
            Command::Figure1 => "figure1",
            Command::Normalize => "normalize",
            Command::Validate => "validate",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Threads {
    Auto,
    #[serde(untagged)]
    Count(usize),
}

impl FromStr for Threads {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("auto") {
            return Ok(Threads::Auto);
        }
        match s.parse::<usize>() {
            Ok(n) if n > 0 => Ok(Threads::Count(n)),
            _ => Err(format!("expected a positive integer or `auto`, got `{s}`")),
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct Opts {
    /// Barrier strength v = V₀R².
    #[arg(long, global = true, default_value_t = 2.0)]
    pub v: f64,
    /// Number of zeros.
    #[arg(long, global = true, default_value_t = 10_000,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub n_max: u64,
    /// Potential exponent σ near the cutoff, for the generic two-term asymptotics.
    #[arg(long, global = true, default_value_t = 0.0)]
    pub sigma: f64,
    /// Zeta-zero heights (bare or indexed layout) instead of the internal finder.
    #[arg(long, global = true)]
    pub zeta_file: Option<PathBuf>,
    /// Prime table (one per line, starting at 2) instead of the internal sieve.
    #[arg(long, global = true)]
    pub prime_file: Option<PathBuf>,
    /// Index at which Nz and Np are evaluated.
    #[arg(long, global = true, default_value_t = 9880,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub normalize_at: u64,
    /// Output paths; meaning depends on the command.
    #[arg(long, global = true, num_args = 1..)]
    pub out: Vec<PathBuf>,
    /// Relative residual tolerance for the root finder.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long, global = true, default_value = "auto")]
    pub threads: Threads,
    /// Emit the asymptotic seeds without Newton refinement.
    #[arg(long, global = true)]
    pub seed_only: bool,
    /// JSON catalog cache, reused when its barrier and settings match.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "lowercase", tag = "kind", content = "path")]
pub enum Source {
    Internal,
    File(PathBuf),
}

impl Source {
    fn from_opt(p: Option<PathBuf>) -> Self {
        p.map_or(Source::Internal, Source::File)
    }

    fn path(&self) -> Option<&Path> {
        match self {
            Source::Internal => None,
            Source::File(p) => Some(p),
        }
    }
}

/// Fully resolved run configuration; printed to stderr by every command.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunSpec {
    pub command: Command,
    pub v: f64,
    pub n_max: usize,
    pub sigma: f64,
    pub zeta_source: Source,
    pub prime_source: Source,
    pub normalize_at: usize,
    pub out: Vec<PathBuf>,
    pub tol: f64,
    pub threads: Threads,
    pub seed_only: bool,
    pub cache: Option<PathBuf>,
}

impl RunSpec {
    pub fn from_cli(cli: Cli) -> Result<Self, CliError> {
        let o = cli.opts;
        if !o.v.is_finite() || o.v < 0.0 {
            return Err(CliError::Usage(format!("--v must be finite and non-negative, got {}", o.v)));
        }
        if !o.sigma.is_finite() || o.sigma < 0.0 {
            return Err(CliError::Usage(format!("--sigma must be non-negative, got {}", o.sigma)));
        }
        if !o.tol.is_finite() || o.tol <= 0.0 {
            return Err(CliError::Usage(format!("--tol must be positive, got {}", o.tol)));
        }
        let max_out = match cli.command {
            Command::Figure1 => 3,
            _ => 1,
        };
        if o.out.len() > max_out {
            return Err(CliError::Usage(format!(
                "`{}` takes at most {max_out} --out path(s), got {}",
                cli.command,
                o.out.len()
            )));
        }
        Ok(Self {
            command: cli.command,
            v: o.v,
            n_max: o.n_max as usize,
            sigma: o.sigma,
            zeta_source: Source::from_opt(o.zeta_file),
            prime_source: Source::from_opt(o.prime_file),
            normalize_at: o.normalize_at as usize,
            out: o.out,
            tol: o.tol,
            threads: o.threads,
            seed_only: o.seed_only,
            cache: o.cache,
        })
    }

    pub fn root_config(&self) -> RootConfig<f64> {
        RootConfig {
            tol_residual: self.tol,
            ..RootConfig::default()
        }
    }

    pub fn barrier(&self) -> Result<Barrier<f64>, CliError> {
        Barrier::new(self.v).map_err(CliError::from)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("run spec serializes")
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{0}")]
    Computation(String),
    #[error("{0}")]
    Io(String),
    /// Validation ran to completion but some check failed.
    #[error("validation failed: {0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Computation(_) | CliError::Failed(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

impl From<JostError> for CliError {
    fn from(e: JostError) -> Self {
        CliError::Computation(e.to_string())
    }
}

impl From<NumberTheoryError> for CliError {
    fn from(e: NumberTheoryError) -> Self {
        CliError::Computation(e.to_string())
    }
}

impl From<SpectralError> for CliError {
    fn from(e: SpectralError) -> Self {
        CliError::Computation(e.to_string())
    }
}

impl From<DataError> for CliError {
    fn from(e: DataError) -> Self {
        CliError::Io(e.to_string())
    }
}

/// Runs `spec` on a pool sized by `--threads`.
pub fn run(spec: &RunSpec) -> Result<(), CliError> {
    // missing inputs fail before any computation
    for p in [spec.zeta_source.path(), spec.prime_source.path()].into_iter().flatten() {
        if !p.is_file() {
            return Err(DataError::FileNotFound(p.to_owned()).into());
        }
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Threads::Count(n) = spec.threads {
        builder = builder.num_threads(n);
    }
    let pool = builder
        .build()
        .map_err(|e| CliError::Computation(format!("thread pool: {e}")))?;
    pool.install(|| match spec.command {
        Command::Zeros => cmd_zeros(spec),
        Command::Figure1 => cmd_figure1(spec),
        Command::Normalize => cmd_normalize(spec),
        Command::Validate => cmd_validate(spec),
    })
}

fn seed_zero(n: usize, barrier: &Barrier<f64>) -> Result<JostZero<f64>, CliError> {
    let beta = asymptotic_seed(n, barrier)?;
    Ok(JostZero {
        n,
        beta,
        residual: jost_reduced(beta, barrier).norm(),
        iterations: 0,
        certified: false,
    })
}

/// The first `n_max` zeros: seeds, a matching cache, or a fresh computation.
/// The second value is a catalog to write back to the cache, if any.
pub fn catalog(spec: &RunSpec) -> Result<(Vec<JostZero<f64>>, Option<ZeroCatalog>), CliError> {
    let barrier = spec.barrier()?;
    if spec.seed_only {
        use rayon::prelude::*;
        if barrier.is_free() {
            return Err(JostError::FreeParticle.into());
        }
        let zeros = (1..=spec.n_max)
            .into_par_iter()
            .map(|n| seed_zero(n, &barrier))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok((zeros, None));
    }
    let cfg = spec.root_config();
    if let Some(path) = spec.cache.as_deref().filter(|p| p.exists()) {
        let cached = read_catalog_file(path)?;
        if cached.v == spec.v && cached.config == cfg && cached.zeros.len() >= spec.n_max {
            let mut zeros = cached.zeros;
            zeros.truncate(spec.n_max);
            return Ok((zeros, None));
        }
    }
    let zeros = find_zeros(spec.n_max, &barrier, &cfg)?;
    let write_back = spec
        .cache
        .as_ref()
        .map(|_| ZeroCatalog::new(&barrier, cfg, zeros.clone()));
    Ok((zeros, write_back))
}

fn store_cache(spec: &RunSpec, catalog: Option<ZeroCatalog>) -> Result<(), CliError> {
    if let (Some(path), Some(c)) = (spec.cache.as_deref(), catalog) {
        write_catalog_file(&c, path)?;
    }
    Ok(())
}

fn zeta_truth(source: &Source, n_max: usize) -> Result<ZetaZeroTable, CliError> {
    Ok(match source {
        Source::Internal => find_zeta_zeros(n_max)?,
        Source::File(p) => parse_zero_table(p)?,
    })
}

fn prime_truth(source: &Source, n_max: usize) -> Result<PrimeTable, CliError> {
    Ok(match source {
        Source::Internal => first_primes(n_max)?,
        Source::File(p) => parse_prime_table(p)?,
    })
}

fn nth(table: &PrimeTable, n: usize) -> Option<f64> {
    table.primes().get(n - 1).map(|&p| p as f64)
}

pub fn comparison_rows(
    zeros: &[JostZero<f64>],
    zeta: Option<&ZetaZeroTable>,
    primes: Option<&PrimeTable>,
) -> Result<Vec<ComparisonRow>, CliError> {
    zeros
        .iter()
        .map(|z| {
            let obs = ResonanceObservables::from_zero(z)?;
            let t = zeta.and_then(|tab| tab.get(z.n));
            let p = primes.and_then(|tab| nth(tab, z.n));
            Ok(ComparisonRow::new(z, &obs, t, p))
        })
        .collect()
}

fn write_rows(rows: &[ComparisonRow], path: &Path) -> Result<(), CliError> {
    let is_json = path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json"));
    if is_json {
        write_json_file(rows, path)?;
    } else {
        write_csv_file(rows, path)?;
    }
    Ok(())
}

fn write_stdout_or(path: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn cmd_zeros(spec: &RunSpec) -> Result<(), CliError> {
    let (zeros, cache) = catalog(spec)?;
    let zeta = match &spec.zeta_source {
        Source::File(p) => Some(parse_zero_table(p)?),
        Source::Internal => None,
    };
    let primes = match &spec.prime_source {
        Source::File(p) => Some(parse_prime_table(p)?),
        Source::Internal => None,
    };
    let rows = comparison_rows(&zeros, zeta.as_ref(), primes.as_ref())?;
    store_cache(spec, cache)?;
    match spec.out.first() {
        Some(p) => write_rows(&rows, p),
        None => {
            let mut buf = Vec::new();
            jostzeta::io::write_csv(&rows, &mut buf)?;
            print!("{}", String::from_utf8_lossy(&buf));
            Ok(())
        }
    }
}

pub const FIG1A_HEADER: [&str; 4] = ["n", "t_hat", "t_asym", "t_true"];
pub const FIG1B_HEADER: [&str; 4] = ["n", "p_hat", "p_asym", "p_true"];

fn cmd_figure1(spec: &RunSpec) -> Result<(), CliError> {
    let (zeros, cache) = catalog(spec)?;
    let zeta = zeta_truth(&spec.zeta_source, spec.n_max)?;
    let primes = prime_truth(&spec.prime_source, spec.n_max)?;
    let rows = comparison_rows(&zeros, Some(&zeta), Some(&primes))?;
    let fig_a: Vec<SeriesRow> = rows
        .iter()
        .map(|r| SeriesRow {
            n: r.n,
            estimate: r.t_hat,
            // undefined at n = 1
            asymptotic: zeta_height_asymptotic(r.n).ok(),
            truth: r.t_true,
        })
        .collect();
    let fig_b = rows
        .iter()
        .map(|r| {
            Ok(SeriesRow {
                n: r.n,
                estimate: r.p_hat,
                asymptotic: Some(prime_asymptotic(r.n)?),
                truth: r.p_true,
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    store_cache(spec, cache)?;
    let path_a = spec.out.first().cloned().unwrap_or_else(|| "fig1a.csv".into());
    let path_b = spec.out.get(1).cloned().unwrap_or_else(|| "fig1b.csv".into());
    write_series_csv_file(&fig_a, FIG1A_HEADER, &path_a)?;
    write_series_csv_file(&fig_b, FIG1B_HEADER, &path_b)?;
    if let Some(p) = spec.out.get(2) {
        write_rows(&rows, p)?;
    }
    Ok(())
}

/// `Nz`, `Np` and their ingredients at `spec.normalize_at`.
pub fn normalization(spec: &RunSpec) -> Result<serde_json::Value, CliError> {
    let n = spec.normalize_at;
    let barrier = spec.barrier()?;
    let zero = if spec.seed_only {
        seed_zero(n, &barrier)?
    } else {
        find_zero(n, &barrier, &spec.root_config())?
    };
    let obs = ResonanceObservables::from_zero(&zero)?;
    let t_true = zeta_truth(&spec.zeta_source, n)?
        .get(n)
        .ok_or_else(|| CliError::Computation(format!("zeta table has no zero {n}")))?;
    let p_true = nth(&prime_truth(&spec.prime_source, n)?, n)
        .ok_or_else(|| CliError::Computation(format!("prime table has no entry {n}")))?;
    Ok(json!({
        "n": n,
        "v": spec.v,
        "re_beta": zero.beta.re,
        "im_beta": zero.beta.im,
        "residual": zero.residual,
        "t_hat": obs.t_hat,
        "p_hat": obs.p_hat,
        "t_true": t_true,
        "p_true": p_true,
        "Nz": t_true / obs.t_hat,
        "Np": p_true / obs.p_hat,
        "orientation": "truth / estimate",
        "small_n_caveat": n < SMALL_N_CAVEAT_BELOW,
    }))
}

fn cmd_normalize(spec: &RunSpec) -> Result<(), CliError> {
    let report = normalization(spec)?;
    if report["small_n_caveat"] == json!(true) {
        eprintln!(
            "warning: n = {} is below {SMALL_N_CAVEAT_BELOW}; the estimates are asymptotic and the factors are not representative",
            spec.normalize_at
        );
    }
    let text = serde_json::to_string_pretty(&report).expect("report serializes");
    write_stdout_or(spec.out.first(), &text)
}

fn cmd_validate(spec: &RunSpec) -> Result<(), CliError> {
    let report = validate(spec)?;
    for w in &report.warnings {
        eprintln!("warning: {w}");
    }
    let text = serde_json::to_string_pretty(&report).expect("report serializes");
    write_stdout_or(spec.out.first(), &text)?;
    if report.passed {
        Ok(())
    } else {
        let failed: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.as_str())
            .collect();
        Err(CliError::Failed(failed.join(", ")))
    }
}
