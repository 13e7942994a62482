use thiserror::Error;

use crate::matroid::ValidationReport;

/// Errors raised by the library. Each variant maps onto one CLI exit code.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the domain of an operation (bad element index, length mismatch).
    #[error("domain error: {0}")]
    Domain(String),
    /// A text record could not be parsed.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    /// Axiom or structural validation failed; the report carries witnesses.
    #[error("validation failed\n{0}")]
    Validation(ValidationReport),
    /// A sign vector that should belong to a family does not.
    #[error("{vector} is not a member of {family}")]
    Membership { vector: String, family: String },
    /// A mathematical precondition of an operation does not hold.
    #[error("precondition unmet: {0}")]
    Precondition(String),
    /// The matroid lacks the data (covectors, circuits, realization) an operation needs.
    #[error("capability missing: {0}")]
    Capability(String),
    /// A configured resource cap was hit.
    #[error("resource limit reached: {0}")]
    Resource(String),
    #[error("{}: {source}", path.display())]
    File {
        path: std::path::PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn capability(msg: impl Into<String>) -> Self {
        Error::Capability(msg.into())
    }

    pub(crate) fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    pub(crate) fn file(path: &std::path::Path, source: std::io::Error) -> Self {
        Error::File {
            path: path.to_path_buf(),
            source,
        }
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Validation(_) | Error::Parse { .. } | Error::Membership { .. } => 2,
            Error::Domain(_) | Error::Precondition(_) | Error::Capability(_) => 3,
            Error::Resource(_) => 4,
            Error::File { .. } | Error::Io(_) => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
