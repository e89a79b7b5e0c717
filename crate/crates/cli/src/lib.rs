//! Command-line front end for [`oddtrees`].
//!
//! Standard output carries results only; diagnostics go to standard error.
//! Exit status: 0 success, 1 verification mismatch, 2 usage error.

pub mod args;
mod commands;
pub mod report;
pub mod table;
pub mod verify;

use std::io::Write;

use thiserror::Error;

use crate::args::{Cli, Command, ReportFormat};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Invalid(#[from] oddtrees::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Invalid(_) => 2,
            CliError::Io(_) | CliError::Csv(_) | CliError::Json(_) => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    Mismatch,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Success => 0,
            Outcome::Mismatch => 1,
        }
    }
}

pub fn run(cli: Cli, out: &mut (dyn Write + Send)) -> Result<Outcome, CliError> {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = cli.jobs {
        pool = pool.num_threads(jobs as usize);
    }
    let pool = pool
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start worker pool: {e}")))?;
    pool.install(|| dispatch(cli.command, out))
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<Outcome, CliError> {
    match command {
        Command::Count(args) => commands::run_count(&args, out),
        Command::Oracle(args) => commands::run_oracle(&args, out),
        Command::Signsum(args) => commands::run_signsum(&args, out),
        Command::Bench(args) => commands::run_bench(&args, out),
        Command::Table(args) => {
            let rows = table::build_table(args.family, args.from, args.to)?;
            out.write_all(table::render_table(&rows, args.format)?.as_bytes())?;
            Ok(Outcome::Success)
        }
        Command::Verify(args) => {
            let report = verify::run_verify(&args);
            match args.format {
                ReportFormat::Text => report.write_text(out)?,
                ReportFormat::Jsonl => report.write_jsonl(out)?,
            }
            Ok(if report.all_passed() {
                Outcome::Success
            } else {
                Outcome::Mismatch
            })
        }
    }
}
