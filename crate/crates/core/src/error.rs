use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid graph: {0}")]
    Graph(String),

    #[error("blow-up targets {0} and {1} are adjacent")]
    AdjacentTargets(usize, usize),

    /// An oracle refused an input whose search space is too large.
    #[error("{what}: {candidates} candidates exceeds the limit of {limit}")]
    Size {
        what: &'static str,
        candidates: u128,
        limit: u128,
    },

    #[error("domain error: {0}")]
    Domain(String),

    /// A lift or extraction did not consume its input exactly; the count it
    /// was handed cannot be the true count of the reduced instance.
    #[error("integrity error: {0}")]
    Integrity(String),

    #[error("protocol error: {0}")]
    Protocol(String),

    #[error("composition error: {0}")]
    Composition(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn is_size_guard(&self) -> bool {
        matches!(self, Error::Size { .. })
    }
}
