use idemprod_core::{Diagnosis, Error};
use serde_json::json;

/// Failures reported by the command line, each with its exit status.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    RouteNotFound(String),
    #[error("{0}")]
    Verification(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Io(_) => 1,
            CliError::RouteNotFound(_) => 2,
            CliError::Verification(_) => 3,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "parse",
            CliError::RouteNotFound(_) => "route-not-found",
            CliError::Verification(_) => "verification",
            CliError::Io(_) => "io",
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "error": {
                "kind": self.kind(),
                "exit": self.exit_code(),
                "message": self.to_string(),
            }
        })
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::RouteNotFound(_) => CliError::RouteNotFound(e.to_string()),
            Error::Unverified(_) => CliError::Verification(e.to_string()),
            other => CliError::Parse(other.to_string()),
        }
    }
}

impl From<Diagnosis> for CliError {
    fn from(d: Diagnosis) -> Self {
        CliError::Verification(format!("certificate does not verify: {d}"))
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}
