use thiserror::Error;

/// Errors produced by chart evaluation, structure validation and the
/// connection/curvature pipeline.
#[derive(Error, Debug, Clone)]
pub enum GeomError {
    #[error("point {coords:?} lies outside the chart domain")]
    OutsideDomain { coords: Vec<f64> },

    #[error("requested derivative order {requested} exceeds the configured maximum {max}")]
    OrderExceeded { requested: usize, max: usize },

    #[error("fields live on different charts ({left} vs {right})")]
    ChartMismatch { left: String, right: String },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("valence mismatch: expected {expected}, got {got}")]
    Valence { expected: String, got: String },

    #[error("{what} is singular (|det| = {det:.3e} below scale-aware threshold {threshold:.3e})")]
    Degenerate { what: String, det: f64, threshold: f64 },

    #[error("{0}")]
    InvalidStructure(String),

    #[error("{0}")]
    Precondition(String),

    #[error("numerically null pivot while orthonormalizing ({0})")]
    SignatureFailure(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("non-finite value encountered in {0}")]
    NonFinite(String),
}

pub type GeomResult<T> = Result<T, GeomError>;
