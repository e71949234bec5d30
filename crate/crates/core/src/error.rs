use thiserror::Error;

/// Errors raised when an input violates a domain constraint.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("state is not normalized: |a|²+|b|² = {norm_sq:.17e}")]
    NotNormalized { norm_sq: f64 },

    #[error("point is not on the unit sphere: |p|² = {norm_sq:.17e}")]
    NotUnitVector { norm_sq: f64 },

    #[error("{name} = {value} is outside the allowed range {range}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("{name} must be finite, got {value}")]
    NotFinite { name: &'static str, value: f64 },

    #[error("matrix is not Hermitian (max deviation {deviation:.3e})")]
    NotHermitian { deviation: f64 },

    #[error("trace must be 1, got {trace}")]
    BadTrace { trace: f64 },

    #[error("fiber needs at least 2 samples, got {0}")]
    TooFewSamples(usize),

    #[error("the scalar 0 does not belong to the group ℝ* = ℝ∖{{0}}")]
    ZeroScalar,

    #[error("zero vector has no projective class")]
    ZeroVector,

    #[error("vector must have at least one component")]
    EmptyVector,

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
