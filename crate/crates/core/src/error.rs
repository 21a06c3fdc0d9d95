use thiserror::Error;

/// Errors raised by the library and the CLI.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid spectral data: {0}")]
    InvalidSpec(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid Lagrangian: {0}")]
    InvalidLagrangian(String),
    #[error("degenerate Lagrangian determinant")]
    DegenerateDeterminant,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("tolerance not met: {0}")]
    Tolerance(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("config error: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code: 2 for bad input, 1 for computation failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidSpec(_) | Error::Dimension(_) | Error::InvalidInput(_) | Error::Config(_) | Error::Io(_) | Error::Json(_) => 2,
            _ => 1,
        }
    }
}
