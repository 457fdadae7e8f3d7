//! Command-line front end for `coulphase`: phase shifts, comparison tables
//! and parameter scans rendered as CSV, JSON or aligned text.

pub mod args;
pub mod commands;
pub mod record;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;
use coulphase::{EvalConfig64, PhaseError};

use crate::args::{Cli, Command};
use crate::commands::Output;

/// Environment variable overriding the default series tolerance.
pub const TOL_ENV: &str = "COULPHASE_TOL";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Phase(#[from] PhaseError),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Phase(PhaseError::Convergence { .. }) => 3,
            CliError::Phase(_) => 2,
            CliError::Io(_) => 1,
        }
    }
}

/// Evaluation settings: flags beat `COULPHASE_TOL`, which beats defaults.
///
/// `--tol` sets the series tolerance, except for `zero` where it sets the
/// root tolerance; the environment variable always targets the series.
pub fn build_config(cli: &Cli, env_tol: Option<&str>) -> Result<EvalConfig64, CliError> {
    let mut cfg = EvalConfig64::default();
    if let Some(raw) = env_tol {
        let tol: f64 = raw
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{TOL_ENV}={raw:?} is not a number")))?;
        cfg = cfg.with_series_tol(tol);
    }
    if let Some(tol) = cli.tol {
        cfg = match cli.command {
            Command::Zero => cfg.with_root_tol(tol),
            _ => cfg.with_series_tol(tol),
        };
    }
    cfg.validate()?;
    Ok(cfg)
}

pub fn execute(cli: &Cli, cfg: &EvalConfig64) -> Result<Output, CliError> {
    match &cli.command {
        Command::Phase { l, eta, method } => commands::phase(*l, *eta, *method, cfg),
        Command::Table => commands::table(cfg),
        Command::Scan(plan) => commands::scan(plan, cfg),
        Command::Relerr { start, stop, steps } => commands::relerr(*start, *stop, *steps, cfg),
        Command::Zero => commands::zero(cfg),
        Command::Deflection {
            mode,
            l,
            lambda,
            eta,
        } => commands::deflection(*mode, *l, *lambda, *eta, cfg),
        Command::Eikonal { b, a, eta, method } => commands::eikonal(*b, *a, *eta, method, cfg),
        Command::Wkb { lambda, l, eta } => commands::wkb(*lambda, *l, *eta, cfg),
    }
}

/// Parses `argv`, runs the command and returns the process exit code.
pub fn run<I, T>(argv: I, env_tol: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return e.exit_code();
        }
    };
    let result = build_config(&cli, env_tol)
        .and_then(|cfg| execute(&cli, &cfg))
        .and_then(|output| {
            for w in &output.warnings {
                writeln!(err, "warning: {w}")?;
            }
            record::write_records(&mut *out, &output.records, cli.format, cli.precision)?;
            Ok(())
        });
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
