use thiserror::Error;

/// Every fallible operation in the crate reports one of these.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input data (bad permutation images, bad matrices).
    #[error("input error: {0}")]
    Input(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// A named constructor was given parameters violating its constraints.
    #[error("constructor error: {0}")]
    Constructor(String),

    /// A mathematical precondition does not hold (element not in group, subgroup not normal, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A configured size cap was exceeded.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// An internal cross-check failed. Never silently resolved.
    #[error("consistency failure: {0}")]
    Consistency(String),

    #[error("invalid Galois map: {0}")]
    InvalidMap(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource(_))
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
