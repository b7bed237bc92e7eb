use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the engine can report. Each variant maps onto a stable
/// machine-readable code (see [`Error::code`]) used by the command line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("structure constants are not associative at basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),

    #[error("declared unit does not act as identity on basis element {0}")]
    BadUnit(usize),

    #[error("operator `{op}` violates its product rule on basis pair ({i}, {j})")]
    RuleViolation { op: String, i: usize, j: usize },

    #[error("element is not idempotent modulo the radical")]
    NotApproxIdempotent,

    #[error("semisimple quotient does not split over the rationals: {0}")]
    SplitFailure(String),

    #[error("subspace is not invariant under the action: {0}")]
    NotHInvariant(String),

    #[error("component is not H-simple: {0}")]
    NotHSimple(String),

    #[error("size limit exceeded: {what} = {size} > {limit}")]
    SizeLimit {
        what: &'static str,
        size: u128,
        limit: u128,
    },

    #[error("non-integral or negative multiplicity for partition {partition}: {value}")]
    NonintegralMultiplicity { partition: String, value: String },

    #[error("verification failed: {0}")]
    Violation(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("cannot read model: {0}")]
    Io(String),

    #[error("unknown zoo model `{0}`")]
    UnknownModel(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "DIMENSION_MISMATCH",
            Error::NotAssociative(..) => "NOT_ASSOCIATIVE",
            Error::BadUnit(_) => "BAD_UNIT",
            Error::RuleViolation { .. } => "RULE_VIOLATION",
            Error::NotApproxIdempotent => "NOT_APPROX_IDEMPOTENT",
            Error::SplitFailure(_) => "SPLIT_FAILURE",
            Error::NotHInvariant(_) => "NOT_H_INVARIANT",
            Error::NotHSimple(_) => "NOT_H_SIMPLE",
            Error::SizeLimit { .. } => "SIZE_LIMIT",
            Error::NonintegralMultiplicity { .. } => "NONINTEGRAL_MULTIPLICITY",
            Error::Violation(_) => "VIOLATION",
            Error::Parse { .. } => "PARSE_ERROR",
            Error::Validation(_) => "VALIDATION_ERROR",
            Error::Io(_) => "IO_ERROR",
            Error::UnknownModel(_) => "UNKNOWN_MODEL",
            Error::InvalidArgument(_) => "INVALID_ARGUMENT",
        }
    }

    /// Process exit status for the command line.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Io(_) | Error::UnknownModel(_) => 3,
            Error::Validation(_)
            | Error::NotAssociative(..)
            | Error::BadUnit(_)
            | Error::RuleViolation { .. } => 4,
            Error::SplitFailure(_) => 5,
            Error::NotHSimple(_) => 6,
            Error::NotHInvariant(_) => 7,
            Error::SizeLimit { .. } => 8,
            Error::NonintegralMultiplicity { .. } | Error::Violation(_) => 9,
            Error::DimensionMismatch { .. }
            | Error::NotApproxIdempotent
            | Error::InvalidArgument(_) => 10,
        }
    }
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
