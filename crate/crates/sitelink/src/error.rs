use std::io;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("input is empty")]
    EmptyInput,
    #[error("line {line}: sequence data before the first '>' header")]
    MissingHeader { line: usize },
    #[error("row {label} has length {len}, expected {expected} (the length of row 1)")]
    UnequalLength {
        label: usize,
        len: usize,
        expected: usize,
    },
    #[error("row {label}, column {column}: symbol {symbol:?} is not in the alphabet {alphabet:?}")]
    UnknownSymbol {
        label: usize,
        column: usize,
        symbol: char,
        alphabet: String,
    },
    #[error("invalid synthetic spec: {0}")]
    InvalidSpec(String),
    #[error("invalid link selection {0:?}")]
    InvalidLinks(String),
    #[error("{0}")]
    Config(String),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Core(#[from] sitelink_core::Error),
}

impl Error {
    /// Process exit status: 1 for problems with the input data, 2 for
    /// configuration problems including an exceeded enumeration budget.
    pub fn exit_code(&self) -> i32 {
        use sitelink_core::Error as C;
        match self {
            Error::EmptyInput
            | Error::MissingHeader { .. }
            | Error::UnequalLength { .. }
            | Error::UnknownSymbol { .. }
            | Error::Io { .. } => 1,
            Error::Core(
                C::EmptyAlphabet
                | C::DuplicateSymbol(_)
                | C::AlphabetTooLarge(_)
                | C::NoRows
                | C::RaggedRow { .. }
                | C::CodeOutOfRange { .. },
            ) => 1,
            _ => 2,
        }
    }
}
