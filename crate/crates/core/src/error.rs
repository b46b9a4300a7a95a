use thiserror::Error;

/// Error type shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet must have at least two symbols, got {0}")]
    AlphabetTooSmall(usize),

    #[error("alphabets differ: expected {expected:?}, found {found:?}")]
    AlphabetMismatch {
        expected: Vec<String>,
        found: Vec<String>,
    },

    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("table must have {expected} cells, got {found}")]
    TableSize { expected: usize, found: usize },

    #[error("argument position {position} out of range for arity {arity}")]
    PositionOutOfRange { position: usize, arity: usize },

    #[error("role list {roles:?} is not a permutation of 0..={arity}")]
    InvalidRolePermutation { roles: Vec<usize>, arity: usize },

    #[error("decomposition needs an alphabet of three or more symbols, got {0}")]
    UnsupportedAlphabet(usize),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown function name `{0}`")]
    UnknownFunction(String),

    #[error("unbound variable @{0}")]
    UnboundVariable(usize),

    #[error("equation has no occurrence of the unknown `{0}`")]
    MissingUnknown(String),

    #[error("the right-hand side must be a parameter, not the unknown `{0}`")]
    UnknownOnRhs(String),

    #[error("unbound parameter `{0}`")]
    UnboundParameter(String),

    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, column, message: message.into() }
    }

    /// True for errors raised while reading malformed input text.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}
