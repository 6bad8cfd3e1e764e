//! Command-line front end for `idemprod-core`: JSON formats for rings,
//! matrices and certificates, and the `idemprod` commands.

pub mod app;
pub mod demos;
pub mod error;
pub mod format;
pub mod human;
pub mod report;

pub use app::{run, Cli, Command, Output};
pub use error::CliError;
