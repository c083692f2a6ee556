use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("zeta pole at s = 1: |s - 1| = {distance:e} is below the guard radius")]
    PoleAtOne { distance: f64 },

    #[error("argument out of domain: {0}")]
    OutOfDomain(String),

    #[error("series did not converge: {needed} terms required, limit is {max_terms}")]
    NoConvergence { needed: usize, max_terms: usize },

    #[error("sieve capacity exceeded: requested {requested}, limit is {limit}")]
    CapacityExceeded { requested: usize, limit: usize },

    #[error("quadrature tolerance {tol:e} not reached: best value {value} with error {error:e} after {panels} panels")]
    ToleranceNotReached {
        tol: f64,
        value: f64,
        error: f64,
        panels: usize,
    },

    #[error("potential diverges at alpha = 1/2 (|alpha - 1/2| = {distance:e})")]
    DivergentAtBoundary { distance: f64 },

    #[error("no bracket for target {target}: {reason}")]
    NoBracket { target: f64, reason: String },

    #[error("unknown figure id {0}; expected 1, 2 or 3")]
    InvalidFigure(u32),

    #[error("invalid zero-ordinate table: {0}")]
    InvalidOrdinates(String),

    #[error("usage: {0}")]
    Usage(String),

    #[error("i/o: {0}")]
    Io(String),

    #[error("format: {0}")]
    Format(String),
}

impl Error {
    /// Process exit code for this error: 2 for bad invocations, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) | Error::InvalidFigure(_) => 2,
            _ => 1,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Format(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Format(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
