use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("format error: {0}")]
    Format(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unsupported size: {0}")]
    UnsupportedSize(String),

    #[error("unsupported input: {0}")]
    UnsupportedInput(String),

    #[error("graph has no cycle")]
    NoCycle,

    #[error("augmentation exceeded {limit} patch rounds")]
    RoundLimit { limit: usize },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
