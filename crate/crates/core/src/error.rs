use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed presentation at {location}: {message}")]
    Malformed { location: String, message: String },

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("phi target is not central: {0}")]
    NotCentral(String),

    #[error("incompatible morphism data: {0}")]
    Incompatible(String),

    #[error("element is not invertible: {0}")]
    NotInvertible(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn malformed(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Malformed { location: location.into(), message: message.into() }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
