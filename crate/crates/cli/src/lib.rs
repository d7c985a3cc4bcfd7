//! Command surface of the `dglie` binary: argument resolution, the five
//! commands and their TSV/JSON reports.

pub mod commands;
pub mod config;
pub mod report;

use std::time::Instant;

use thiserror::Error;

pub use commands::{cmd_ce_check, cmd_counterexample, cmd_dual_example, cmd_table1, cmd_table2};
pub use config::{Cli, Command, Preset, RunConfig};
pub use report::{Assertion, Format, Report, Row, Table};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },
    #[error("{0}: {1}")]
    Io(String, String),
    #[error(transparent)]
    Core(#[from] dglie::Error),
}

/// Runs the resolved command and stamps the wall-clock duration.
pub fn run(config: &RunConfig) -> Result<Report, CliError> {
    config.validate()?;
    let start = Instant::now();
    let mut report = match config.command {
        Command::Table1 { max_wl } => cmd_table1(max_wl)?,
        Command::Table2 { max_wl } => cmd_table2(max_wl)?,
        Command::Counterexample { deg_a, deg_b, count, cap, verify } => cmd_counterexample(deg_a, deg_b, count, cap, verify)?,
        Command::DualExample { deg_a, count, cap } => cmd_dual_example(deg_a, count, cap)?,
        Command::CeCheck { preset, cap } => cmd_ce_check(preset, cap)?,
    };
    report.duration_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}
