//! Library half of the `isosqueeze` binary: argument types, table
//! rendering and the command runners, kept here so they can be exercised
//! in-process.

pub mod args;
pub mod figures;
pub mod format;
mod run;

pub use run::{execute, run, Artifact, CliError};

use clap::Parser;

/// Parses `args` (without the binary name) and returns the CSV the command
/// would write.
pub fn csv_for(args: &[&str]) -> Result<String, CliError> {
    let cli = args::Cli::try_parse_from(std::iter::once("isosqueeze").chain(args.iter().copied()))
        .map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(execute(&cli)?.table.to_csv())
}

#[cfg(test)]
mod tests;
