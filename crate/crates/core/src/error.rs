use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("{what} needs {requested} but the configured cap is {cap}")]
    ResourceLimit {
        what: &'static str,
        requested: String,
        cap: u64,
    },

    /// A structural statement that should hold for every Horadam cube failed
    /// on a concrete instance.
    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn limit(what: &'static str, requested: impl ToString, cap: u64) -> Self {
        Error::ResourceLimit {
            what,
            requested: requested.to_string(),
            cap,
        }
    }
}
