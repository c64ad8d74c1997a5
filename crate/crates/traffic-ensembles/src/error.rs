use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EnsembleError {
    #[error("pseudo-variance {0} has modulus above 1")]
    InvalidBeta(num_complex::Complex64),
    #[error("entry law is not centered with unit variance (mean {mean}, variance {variance})")]
    NotStandardized { mean: f64, variance: f64 },
    #[error("discrete law is malformed: {0}")]
    MalformedLaw(String),
    #[error("invalid band profile: {0}")]
    InvalidProfile(String),
    #[error("matrix dimensions differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),
}
