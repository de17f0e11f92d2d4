use thiserror::Error;

/// Errors produced by board construction, geometry queries, and solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A precondition on an argument was violated.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Exact integer arithmetic exceeded the machine width. Never silently
    /// wraps; the offending quantity is named.
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    /// The board's cell count exceeds the configured cap.
    #[error("board with {cells} cells exceeds the cap of {cap}")]
    CellCapExceeded { cells: u64, cap: u64 },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
