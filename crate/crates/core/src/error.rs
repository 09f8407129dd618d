use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A character outside the step alphabet.
    #[error("unexpected character {found:?} at index {index}")]
    Parse { index: usize, found: char },

    #[error("point index {index} out of range for path of length {len}")]
    Index { index: usize, len: usize },

    /// Arguments outside the range an operation is defined on.
    #[error("invalid parameters: {0}")]
    Parameter(String),

    /// The value is mathematically undefined (e.g. a non-integral number).
    #[error("domain error: {0}")]
    Domain(String),

    /// The input path is well formed but violates the map's precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("not a valid {family}: {path:?}")]
    InvalidPath { family: &'static str, path: String },

    #[error("I/O error: {0}")]
    Io(String),

    /// A construction produced something it never should; always a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
