use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum QspError {
    #[error("x = {0} lies outside [-1, 1]")]
    Domain(f64),

    #[error("odd reduced phase factors are empty: no degrees of freedom")]
    NoDegreesOfFreedom,

    #[error("expected an odd number of samples (2d+1), got {0}")]
    EvenSampleCount(usize),

    #[error("input is empty")]
    EmptyInput,

    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("parity mismatch: {0}")]
    ParityMismatch(&'static str),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("H^-1 is only defined on [0, r_c), got {0}")]
    InverseDomain(f64),

    #[error("decay bound not applicable: ||c||_1 = {0} is not below r_c")]
    BoundNotApplicable(f64),

    #[error("iteration diverged at step {iteration}: residual {residual:e} exceeds {limit:e}")]
    Diverged {
        iteration: usize,
        residual: f64,
        limit: f64,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, QspError>;
