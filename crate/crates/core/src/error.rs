//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by grid construction, scheme assembly, and time stepping.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid coefficient: {0}")]
    InvalidCoefficient(String),

    #[error("scheme variant {variant:?} is not supported for {context}")]
    UnsupportedVariant {
        variant: crate::operators::SchemeVariant,
        context: &'static str,
    },

    #[error("non-finite value in initial data at {location}")]
    NonFiniteInitialData { location: String },

    #[error("numerical instability detected at step {step}, t = {time:.6e}")]
    UnstableAbort { step: usize, time: f64 },

    #[error("positivity violated after limiting: min average {min:.3e} at step {step}")]
    PositivityViolated { min: f64, step: usize },

    #[error("eigenvalue solver failed to converge: {0}")]
    RootFindingFailed(String),

    #[error("invalid run configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
