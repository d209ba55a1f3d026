use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// The variants fall into three families which the CLI maps onto distinct
/// exit codes: domain errors (bad input, unit/zero ideal, violated
/// preconditions), resource caps, and internal consistency violations. The
/// last family should never be reachable; it signals a bug.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition {partition} has {parts} parts but the ambient dimension is {n}")]
    TooManyParts {
        partition: String,
        parts: usize,
        n: usize,
    },

    #[error("ambient dimensions differ ({0} vs {1})")]
    AmbientMismatch(usize, usize),

    #[error("operation is undefined for the unit ideal")]
    UnitIdeal,

    #[error("operation is undefined for the zero ideal")]
    ZeroIdeal,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("internal consistency violation: {0}")]
    ConsistencyViolation(String),
}

/// Coarse classification used for exit codes and the machine-readable error
/// object.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Domain,
    Resource,
    Internal,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::ResourceLimit(_) => ErrorKind::Resource,
            Error::ConsistencyViolation(_) => ErrorKind::Internal,
            _ => ErrorKind::Domain,
        }
    }

    /// Short stable identifier, used as the `"kind"` field of JSON errors.
    pub fn code(&self) -> &'static str {
        match self {
            Error::TooManyParts { .. } => "too_many_parts",
            Error::AmbientMismatch(..) => "ambient_mismatch",
            Error::UnitIdeal => "unit_ideal",
            Error::ZeroIdeal => "zero_ideal",
            Error::Precondition(_) => "precondition",
            Error::InvalidInput(_) => "invalid_input",
            Error::ResourceLimit(_) => "resource_limit",
            Error::ConsistencyViolation(_) => "consistency_violation",
        }
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn violation(msg: impl Into<String>) -> Self {
        Error::ConsistencyViolation(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
