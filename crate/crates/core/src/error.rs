use thiserror::Error;

/// Error type shared by the whole crate.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("variable tables do not match")]
    VarTableMismatch,
    #[error("algebra contexts do not match")]
    ContextMismatch,
    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },
    #[error("variable {name} is not invertible in this context")]
    NotInvertible { name: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("specialization value must be nonzero")]
    ZeroSpecialization,
    #[error("denominator atom {atom} is not enabled in this localization")]
    AtomNotEnabled { atom: String },
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("generator `{0}` has no assignment")]
    UnassignedGenerator(String),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("letter {0} is not valid for this family")]
    InvalidLetter(String),
    #[error("dimension guard exceeded: need {need}, cap {cap} (raise SWTOWER_MAX_DIM)")]
    DimensionGuard { need: usize, cap: usize },
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("{0}")]
    Usage(String),
}
