use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by the solver library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid grid: expected {expected} samples, got {got}")]
    InvalidGrid { expected: usize, got: usize },

    #[error("truncation mismatch: {left} vs {right}")]
    TruncationMismatch { left: usize, right: usize },

    #[error("invalid shift: {0}")]
    InvalidShift(String),

    #[error("point {z} lies on the wrong side of the unit circle for a {side} evaluation")]
    WrongSide { z: Complex64, side: &'static str },

    #[error("lambda = {lambda} is within {distance:e} of the Dirichlet spectrum")]
    SpectrumProximity { lambda: Complex64, distance: f64 },

    #[error("solver failure: {0}")]
    SolverFailure(String),

    #[error("input is not real-valued: {0}")]
    NonRealInput(String),

    #[error("mode {mode} outside truncation order {order}")]
    ModeOutOfRange { mode: i64, order: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
