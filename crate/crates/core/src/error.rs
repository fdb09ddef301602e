use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("grid needs at least 8 points, got {0}")]
    GridTooSmall(usize),

    #[error("radial grid must satisfy 0 < r_min < r_max, got r_min={r_min}, r_max={r_max}")]
    InvalidRadialRange { r_min: f64, r_max: f64 },

    #[error("radial grid is not strictly increasing at index {0}")]
    NonMonotoneGrid(usize),

    #[error("operation needs a {expected} grid")]
    WrongGridKind { expected: &'static str },

    #[error("kappa must be positive and finite, got {0}")]
    InvalidKappa(f64),

    #[error("matrix dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("eigensolver did not converge within {0} iterations")]
    NonConvergence(usize),

    #[error("dense eigensolver failed: {0}")]
    DenseSolver(String),

    #[error("lambda={lambda} is within {guard} of a degeneracy point for mode {mode}")]
    DegeneracyGuard { lambda: f64, mode: i64, guard: f64 },

    #[error("mode {mode} at lambda={lambda} is ambiguous (best overlap {overlap:.4})")]
    AmbiguousMode { mode: i64, lambda: f64, overlap: f64 },

    #[error("mode {mode} is not available for model {model}")]
    ModeUnavailable { mode: i64, model: &'static str },

    #[error("vectors are nearly orthogonal (overlap {0:.4} <= 0.5)")]
    NearOrthogonal(f64),

    #[error("finite-difference step {0} outside the allowed range")]
    InvalidStep(f64),

    #[error("argument must be positive, got {0}")]
    NonPositiveArgument(f64),

    #[error("unsupported: {0}")]
    Unsupported(&'static str),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("quantity expected real has imaginary part {imag:e} (scale {scale:e})")]
    NotReal { imag: f64, scale: f64 },
}
