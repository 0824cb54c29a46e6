use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("axis {axis} out of range for dimension {dim}")]
    AxisOutOfRange { axis: usize, dim: usize },

    #[error("integer overflow in lattice arithmetic")]
    Overflow,

    #[error("empty set cannot be represented")]
    EmptySet,

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("not a good semigroup: {0}")]
    NotGood(String),

    #[error("multiplicity undefined for non-local semigroup")]
    NotLocal,

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("enumeration bound too large: {0}")]
    CapTooLarge(String),

    #[error("generation failed after {attempts} attempts: {reason}")]
    GenerationFailed { attempts: u32, reason: String },

    #[error("rendering requires dimension 2, found {0}")]
    RenderDimension(usize),

    /// Two independent computations of the same property disagreed.
    #[error("internal defect: {0}")]
    InternalDefect(String),
}
