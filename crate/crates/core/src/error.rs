use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Failure modes shared by every construction in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The input could not be interpreted as the object it claims to be.
    #[error("malformed input: {0}")]
    Malformed(String),

    /// The input is well formed but outside the domain of the requested operation.
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("graph is not bipartite (odd cycle through {cycle:?})")]
    NotBipartite { cycle: Vec<usize> },

    #[error("structural error at vertex {vertex}: {reason}")]
    Structural { vertex: usize, reason: String },

    /// A construction produced output that fails its own postcondition.
    #[error("internal assertion failed: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn structural(vertex: usize, reason: impl Into<String>) -> Self {
        Error::Structural {
            vertex,
            reason: reason.into(),
        }
    }
}
