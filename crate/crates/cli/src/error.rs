use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] horadam::Error),

    #[error("{0}")]
    Usage(String),

    #[error("cannot access {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed input: {0}")]
    Format(String),

    #[error("{0}")]
    CheckFailed(String),
}

impl CliError {
    /// 2 for usage and parameter errors, 3 for resource caps, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(horadam::Error::InvalidParams(_) | horadam::Error::InvalidWord(_)) => 2,
            CliError::Core(horadam::Error::ResourceLimit { .. }) => 3,
            _ => 1,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(source: std::io::Error) -> Self {
        CliError::Io {
            path: "<stdout>".into(),
            source,
        }
    }
}
