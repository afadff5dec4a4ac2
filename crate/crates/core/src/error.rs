use thiserror::Error;

/// Errors produced across the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("NotOrthonormal: matrix columns are not orthonormal (max |AᵀA - I| = {deviation:.3e})")]
    NotOrthonormal { deviation: f64 },
    #[error("NotNormalized: right-hand side has norm {norm}, expected 1")]
    NotNormalized { norm: f64 },
    #[error("DimensionMismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("InvalidMatrix: {0}")]
    InvalidMatrix(String),
    #[error("InvalidTarget: {0}")]
    InvalidTarget(String),
    #[error("NegativeProbability: entry {index} is {value}")]
    NegativeProbability { index: usize, value: f64 },
    #[error("NotOrthogonal: synthesis target is not a real orthogonal 4x4 matrix")]
    NotOrthogonal,
    #[error("NotFound: no circuit with at most {max_gates} gates realizes the target")]
    NotFound { max_gates: usize },
    #[error("InvalidProbability: {0} is outside [0, 1]")]
    InvalidProbability(f64),
    #[error("InvalidCounts: N = {n}, M = {m}")]
    InvalidCounts { n: usize, m: usize },
    #[error("InvalidMarkedSet: {0}")]
    InvalidMarkedSet(String),
    #[error("UnsupportedGate: {0} has no OpenQASM 2.0 equivalent")]
    UnsupportedGate(String),
    #[error("InvalidLabel: {0}")]
    InvalidLabel(String),
    #[error("Parse: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
