//! `hpl`: coefficient tables, closed-form bounds, verification campaigns and
//! domain probes for the hyperbola classes, emitted as JSON or CSV.

pub mod args;
pub mod commands;
pub mod grid;
pub mod output;

use std::fmt;
use std::io;

pub use args::Cli;

/// Exit status when a campaign finds a value above its bound.
pub const EXIT_VIOLATION: u8 = 3;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(hpl_core::Error),
    Io(io::Error),
    Csv(csv::Error),
}

impl CliError {
    /// 2 for bad input, 1 for numeric or I/O failures.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(e) if e.is_usage() => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
            CliError::Csv(e) => write!(f, "csv error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<hpl_core::Error> for CliError {
    fn from(e: hpl_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Csv(e)
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

/// Runs a parsed command line, writes its output, and returns the exit status.
pub fn run(cli: &Cli) -> Result<u8> {
    let (record, out, status) = commands::dispatch(&cli.command)?;
    output::emit(&record, out.format, out.out.as_deref())?;
    Ok(status)
}
