//! Command implementations behind the `facecycle` binary.
//!
//! Every command returns an [`Outcome`]: a deterministic JSON [`Report`], a
//! pass/fail verdict and a few human-readable summary lines. The binary
//! prints the report on stdout and the summary on stderr, and maps the
//! verdict to the exit code (0 pass, 1 property failure, 2 input error).

pub mod commands;
pub mod corpus;
pub mod dot;
pub mod format;

use serde::Serialize;
use serde_json::Value;

pub use commands::{cmd_bipartite, cmd_decompose, cmd_lattice, cmd_shelling, cmd_verify, Method, TargetSpec};
pub use corpus::{cmd_corpus, Family};
pub use format::{load, Loaded, PolytopeFile};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}: {1}")]
    Io(String, #[source] std::io::Error),
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("{field}: {message}")]
    Field { field: String, message: String },
    #[error("TargetNotEven: odd-degree vertices {0:?}")]
    TargetNotEven(Vec<usize>),
    #[error(transparent)]
    Geometry(#[from] facecycle::Error),
}

impl CliError {
    pub(crate) fn field(field: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Field { field: field.into(), message: message.into() }
    }

    /// 1 for errors that mean a checked property failed, 2 for bad input.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Geometry(facecycle::Error::InternalAssertion(_))
            | CliError::Geometry(facecycle::Error::ShellingRejected(_)) => 1,
            _ => 2,
        }
    }
}

/// Machine-readable command result. Contains nothing that varies between
/// runs with the same input, command and seed.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub input_digest: String,
    pub seed: Option<u64>,
    pub results: Value,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: Report,
    pub passed: bool,
    pub summary: Vec<String>,
    /// Graph export for `--emit-dot`.
    pub dot: Option<String>,
}
