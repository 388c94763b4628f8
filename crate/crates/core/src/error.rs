use std::path::PathBuf;

use thiserror::Error;

/// Broad error classes. The command-line front end maps each class onto a
/// distinct process exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Input,
    Capacity,
    Domain,
    Parse,
    Io,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("unknown set name `{name}`; valid names are: {}", valid.join(", "))]
    UnknownName {
        name: String,
        valid: Vec<&'static str>,
    },

    #[error("enumeration of {requested} intervals exceeds the cap of {cap}")]
    Capacity { requested: String, cap: u64 },

    #[error(
        "address index {index} at level {level} is out of range (retained set has {size} digits)"
    )]
    Address {
        level: usize,
        index: usize,
        size: usize,
    },

    #[error("unsupported structure: {0}")]
    UnsupportedStructure(String),

    #[error("zeta has a pole at s = 1")]
    Pole,

    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("serialization failed: {0}")]
    Serialize(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Input(_)
            | Error::UnknownName { .. }
            | Error::Address { .. }
            | Error::UnsupportedStructure(_)
            | Error::InsufficientData(_) => ErrorKind::Input,
            Error::Capacity { .. } => ErrorKind::Capacity,
            Error::Pole | Error::Domain(_) => ErrorKind::Domain,
            Error::Parse { .. } => ErrorKind::Parse,
            Error::Io { .. } | Error::Serialize(_) => ErrorKind::Io,
        }
    }

    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Serialize(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Serialize(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
