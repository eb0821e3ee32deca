use thiserror::Error;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan type {token:?}: {reason}")]
    InvalidType { token: String, reason: String },

    #[error("weight {0:?} is not dominant")]
    NonDominant(Vec<i64>),

    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("{what} exceeds the cap of {cap}")]
    CapExceeded { what: String, cap: usize },

    #[error("invalid degree {degree}: {reason}")]
    InvalidDegree { degree: usize, reason: String },

    #[error("invalid index tuple {0:?}")]
    InvalidTuple(Vec<usize>),

    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("not a chain complex: outgoing map composed with incoming map is non-zero")]
    NotAComplex,

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn cap(what: impl Into<String>, cap: usize) -> Self {
        Error::CapExceeded { what: what.into(), cap }
    }

    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse { input: input.to_string(), reason: reason.into() }
    }

    /// True for resource-cap failures, which callers usually report separately.
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
