//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum SrgError {
    /// A theorem hypothesis required by the requested operation does not hold.
    #[error("hypothesis violation: {0}")]
    HypothesisViolation(String),

    /// A parameter is outside its valid domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Vectors of different dimensions were mixed.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// The operation is only defined on a restricted region form.
    #[error("unsupported region form: {0}")]
    UnsupportedForm(String),

    /// Text input could not be parsed.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// The eigenvalue iteration did not converge within the sweep budget.
    #[error("eigenvalue iteration failed to converge")]
    EigenNonConvergence,

    /// A linear system required by a resolvent or constructor is singular.
    #[error("singular linear system in {0}")]
    Singular(String),

    /// The operator does not provide the oracle the method needs.
    #[error("missing oracle: {0}")]
    MissingOracle(String),

    /// The statement being checked excludes this input from its domain.
    #[error("outside theorem domain: {0}")]
    TheoremDomain(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, SrgError>;
