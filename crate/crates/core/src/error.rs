use thiserror::Error;

/// Errors raised by game construction and the solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid weight vector: {0}")]
    Weight(String),
    #[error("invalid mixed strategy: {0}")]
    Strategy(String),
    #[error("construction needs {required} columns or criteria, above the cap of {cap}")]
    Size { required: u128, cap: u128 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("solver failure: {0}")]
    Solver(String),
    #[error("cannot parse rational {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T> = std::result::Result<T, GameError>;
