use thiserror::Error;

pub type Result<T, E = CliError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("unresolved reference: {0}")]
    UnresolvedReference(String),
}

impl CliError {
    /// 1 for unreadable or malformed input, 2 for input that parses but
    /// does not describe valid objects.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Parse(_) => 1,
            CliError::Validation(_) | CliError::UnresolvedReference(_) => 2,
        }
    }
}
