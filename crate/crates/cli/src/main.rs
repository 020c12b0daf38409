mod args;
mod commands;

use std::fmt;
use std::process::ExitCode;

use clap::Parser;

use args::Cli;

/// Exit codes: 0 success, 1 the property does not hold, 2 usage or input
/// error, 3 an internal limit stopped the run.
pub const EXIT_PROPERTY: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_LIMIT: u8 = 3;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> CliError {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    pub fn limit(message: impl Into<String>) -> CliError {
        CliError {
            code: EXIT_LIMIT,
            message: message.into(),
        }
    }

    pub fn property(message: impl Into<String>) -> CliError {
        CliError {
            code: EXIT_PROPERTY,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<cliquesat::Error> for CliError {
    fn from(err: cliquesat::Error) -> Self {
        use cliquesat::Error::*;
        let code = match err {
            NotSaturated | NoPacking { .. } => EXIT_PROPERTY,
            Workers(_) => EXIT_LIMIT,
            _ => EXIT_USAGE,
        };
        CliError {
            code,
            message: err.to_string(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::usage(err.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.code)
        }
    }
}
