//! Command-line front end, file formats and the reproduction harness for
//! `graphdyn-core`.
//!
//! Every subcommand is a thin adapter: it parses its arguments, calls the
//! core library and renders the result either as text or as a JSON document
//! carrying a `generator` field.

pub mod cli;
pub mod commands;
pub mod inputs;
pub mod json;
pub mod repro;

/// Failures surfaced to the user, split by exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    User(String),
    #[error("{0}")]
    Internal(String),
}

impl From<graphdyn_core::Error> for CliError {
    fn from(e: graphdyn_core::Error) -> Self {
        CliError::User(e.to_string())
    }
}
