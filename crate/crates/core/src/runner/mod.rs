//! Command line runner: configuration, caching, jobs and reports.

pub mod cache;
pub mod config;
pub mod jobs;
pub mod verify;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::Parser;

pub use cache::ResultCache;
pub use config::{parse_job, Format, GridSpec, Job, JobConfig};
pub use jobs::{render_csv, render_json, run_job, Report};
pub use verify::{run_verify_bank, VerifyOutcome};

use crate::error::{HkError, Result};

/// Exit status for a failed `verify` job.
pub const EXIT_VERIFY: i32 = 4;

/// Maps an error to the process exit code: 1 configuration, 2 budget,
/// 3 domain.
pub fn exit_code(e: &HkError) -> i32 {
    match e {
        HkError::NotPrime(_)
        | HkError::CharacteristicTooLarge(_)
        | HkError::Parse { .. }
        | HkError::Inhomogeneous { .. }
        | HkError::Config(_)
        | HkError::ArityMismatch { .. }
        | HkError::Io(_) => 1,
        HkError::BudgetExceeded(_) | HkError::Overflow(_) => 2,
        HkError::InverseOfZero(_)
        | HkError::InfiniteColength(_)
        | HkError::NotBounded(_)
        | HkError::Domain(_) => 3,
    }
}

#[derive(Debug, Parser)]
#[command(name = "hk", about = "h-functions, Hilbert-Kunz data and F-thresholds at finite level")]
pub struct Cli {
    /// One of h-grid, density-grid, graded-density, ehk, multiplicity,
    /// fthreshold, flimbus, stable-point, fp-grid, convexity, boij,
    /// scaling-check, adjoin-check, asymptotes, inequalities, verify.
    pub job: String,
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub format: Option<String>,
    #[arg(long)]
    pub threads: Option<usize>,
    #[arg(long)]
    pub no_cache: bool,
    #[arg(long, default_value = ".hk-cache")]
    pub cache_dir: PathBuf,
}

const VERIFY_CONFIG: &str = r#"{"p":2,"vars":["x","y"],"job":"verify"}"#;

fn execute(cli: &Cli) -> Result<i32> {
    let job: Job = cli.job.parse()?;
    let text = match &cli.config {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| HkError::Io(format!("{}: {e}", path.display())))?,
        None if job == Job::Verify => VERIFY_CONFIG.to_string(),
        None => return Err(HkError::Config("--config is required".into())),
    };
    let mut cfg = parse_job(&text, Some(job))?;
    if let Some(f) = &cli.format {
        cfg.format = f.parse()?;
    }
    if let Some(o) = &cli.out {
        cfg.out = Some(o.clone());
    }
    let cache = if cli.no_cache {
        ResultCache::disabled()
    } else {
        ResultCache::new(&cli.cache_dir)?
    };
    let report = match cli.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| HkError::Config(e.to_string()))?
            .install(|| run_job(&cfg, &cache))?,
        None => run_job(&cfg, &cache)?,
    };
    let text = match cfg.format {
        Format::Csv => render_csv(&report.rows)?,
        Format::Json => render_json(&report.json)?,
    };
    match &cfg.out {
        Some(path) => fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(if report.failed { EXIT_VERIFY } else { 0 })
}

/// Parses arguments, runs the job and returns the exit code. Errors are
/// reported on stderr.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("hk: {e}");
            exit_code(&e)
        }
    }
}
