use thiserror::Error;

/// Errors produced by the counting recursions and input ingestion.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree must be at least {min}, got {got}")]
    InvalidDegree { got: i64, min: u32 },

    #[error("genus must be between 0 and 3, got {0}")]
    InvalidGenus(i64),

    #[error("zero cannot be raised to a negative power")]
    ZeroToNegativePower,

    #[error("missing Severi input: {0}")]
    MissingInput(String),

    #[error("invalid Severi input file: {0}")]
    InputFormat(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid_degree(got: impl Into<i64>, min: u32) -> Self {
        Error::InvalidDegree {
            got: got.into(),
            min,
        }
    }
}
