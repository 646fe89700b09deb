use thiserror::Error;

/// Errors raised by the library. Several of them (`InexactDivision`,
/// `SingularMatrix`, `AssertionFailure`) can only fire on an internal bug.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("variable `{0}` is outside the allowed scope")]
    VariableOutOfScope(String),
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("singular matrix")]
    SingularMatrix,
    #[error("cell ({0},{1}) is outside the diagram")]
    CellOutsideDiagram(usize, usize),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("size {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("labels are not distinct: {0:?}")]
    SigmaNotDistinct(Vec<usize>),
    #[error("weight map does not match the corner set")]
    WeightDomainMismatch,
    #[error("d- is not defined on V_0")]
    LevelZero,
    #[error("internal assertion failed: {0}")]
    AssertionFailure(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
