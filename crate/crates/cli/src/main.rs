use std::process::ExitCode;

use clap::Parser;
use dglie_cli::{run, Cli, RunConfig};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = RunConfig::from_cli(cli).and_then(|config| {
        let report = run(&config)?;
        report.write(config.format, config.out.as_deref())?;
        Ok(report)
    });
    match outcome {
        Ok(report) if report.all_pass() => ExitCode::SUCCESS,
        Ok(report) => {
            for f in report.failures() {
                eprintln!("FAIL {f}");
            }
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
