use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    #[error("probability masses sum to {sum}, expected 1")]
    MassSum { sum: f64 },

    #[error("negative probability mass {mass} at point {point}")]
    NegativeMass { point: f64, mass: f64 },

    #[error("duplicate support point {0}")]
    DuplicatePoint(f64),

    #[error("beta must be positive, got {0}")]
    NonPositiveBeta(f64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("malformed interval [{lo}, {hi}]")]
    MalformedInterval { lo: f64, hi: f64 },

    #[error("cannot compare a discrete distribution with a continuous one")]
    KindMismatch,

    #[error("quadrature did not converge on [{lo}, {hi}] within {panels} panels")]
    QuadratureDiverged { lo: f64, hi: f64, panels: usize },

    #[error("sample set {label:?}: {reason}")]
    InvalidSamples { label: String, reason: String },

    #[error("zero spread in sample set {0:?}; bandwidth undefined")]
    ZeroSpread(String),

    #[error("failed to parse distribution spec: {0}")]
    Spec(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
