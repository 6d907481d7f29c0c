//! The `tubepoly` command line, as a library so it can be driven from tests.

mod args;
mod commands;
mod output;

pub use args::{BodyArg, Cli, Command, Common, Format};
pub use commands::run;
pub use output::Output;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("consistency failure: {0}")]
    Consistency(String),
    #[error("{0}")]
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Consistency(_) => 3,
            CliError::Failure(_) => 1,
        }
    }
}

impl From<bodies::BodyError> for CliError {
    fn from(e: bodies::BodyError) -> Self {
        match e {
            bodies::BodyError::InvariantViolation(_) => CliError::Consistency(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<rootloc::RootError> for CliError {
    fn from(e: rootloc::RootError) -> Self {
        use rootloc::RootError::*;
        match e {
            Consistency(_) => CliError::Consistency(e.to_string()),
            Precondition(_) | Domain(_) => CliError::Usage(e.to_string()),
            _ => CliError::Failure(e.to_string()),
        }
    }
}

impl From<weyl::WeylError> for CliError {
    fn from(e: weyl::WeylError) -> Self {
        match e {
            weyl::WeylError::Consistency(_) => CliError::Consistency(e.to_string()),
            weyl::WeylError::Body(b) => b.into(),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<entire::EntireError> for CliError {
    fn from(e: entire::EntireError) -> Self {
        match e {
            entire::EntireError::Roots(r) => r.into(),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<mc_oracle::McError> for CliError {
    fn from(e: mc_oracle::McError) -> Self {
        match e {
            mc_oracle::McError::NoConvergence { .. } => CliError::Failure(e.to_string()),
            mc_oracle::McError::Body(b) => b.into(),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

/// Runs a parsed command and writes its output; returns the exit code.
pub fn execute(cli: &Cli) -> i32 {
    let out = match run(cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return e.exit_code();
        }
    };
    if let Some(path) = &cli.common.out {
        let text = match cli.common.format {
            Format::Json => Ok(out.to_json()),
            Format::Csv => out.to_csv(),
        };
        let written = text.and_then(|t| std::fs::write(path, t).map_err(|e| CliError::Failure(e.to_string())));
        if let Err(e) = written {
            eprintln!("error: {e}");
            return e.exit_code();
        }
    }
    if cli.common.json {
        print!("{}", out.to_json());
    } else {
        print!("{}", out.to_table());
    }
    0
}
