mod commands;
mod config;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use config::Cli;

/// Bad flags, parameters outside their domain, unreadable config.
#[derive(Debug)]
pub struct UsageError(pub String);

#[derive(Debug)]
pub enum Failure {
    Usage(UsageError),
    Runtime(curvlab::VerifyError),
}

impl From<UsageError> for Failure {
    fn from(e: UsageError) -> Self {
        Failure::Usage(e)
    }
}

fn configure_threads() -> Result<(), UsageError> {
    let Ok(raw) = std::env::var("CURVLAB_THREADS") else { return Ok(()) };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| UsageError(format!("CURVLAB_THREADS must be a positive integer, got `{raw}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| UsageError(format!("cannot configure thread pool: {e}")))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = (|| -> Result<commands::Outcome, Failure> {
        configure_threads()?;
        let mut opts = cli.opts.clone();
        if let Some(path) = opts.config.clone() {
            opts.merge_file(&path)?;
        }
        let outcome = commands::run(&cli.command, &opts)?;
        match &opts.output {
            Some(path) => std::fs::write(path, &outcome.body)
                .map_err(|e| UsageError(format!("cannot write {}: {e}", path.display())))?,
            None => {
                let _ = std::io::stdout().write_all(outcome.body.as_bytes());
            }
        }
        Ok(outcome)
    })();
    match result {
        Ok(o) if o.failed => ExitCode::from(1),
        Ok(_) => ExitCode::SUCCESS,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {}", e.0);
            ExitCode::from(2)
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
