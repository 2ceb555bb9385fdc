//! Crate-wide error type.
//!
//! Diagnostics carry `f64` payloads regardless of the working scalar so the
//! error type stays non-generic.

/// Errors reported by validation and construction routines.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix dimension {dim} is not a power of two")]
    NotQubitDimension { dim: usize },

    #[error("matrix contains a non-finite entry at ({row}, {col})")]
    NonFiniteEntry { row: usize, col: usize },

    #[error("matrix is not Hermitian: max asymmetry {max_asymmetry:e}")]
    NotHermitian { max_asymmetry: f64 },

    #[error("trace deviates from one by {deviation:e}")]
    TraceNotOne { deviation: f64 },

    #[error("matrix is not positive semidefinite: min eigenvalue {min_eigenvalue:e}")]
    NotPositiveSemidefinite { min_eigenvalue: f64 },

    #[error("field direction has norm {norm} instead of 1")]
    NotUnitVector { norm: f64 },

    #[error("qubit count {n} outside supported range 1..={max}")]
    UnsupportedQubitCount { n: usize, max: usize },

    #[error("eigensolver failed to converge within {iterations} iterations")]
    EigenConvergence { iterations: usize },

    #[error("time grid is empty")]
    EmptyTimeGrid,

    #[error("time grid is not ascending at index {index}")]
    UnsortedTimeGrid { index: usize },

    #[error("time grid contains a negative entry at index {index}")]
    NegativeTime { index: usize },

    #[error("invalid spectral model: {0}")]
    InvalidSpectralModel(String),

    #[error("spectral grid needs at least two ascending points")]
    InvalidSpectralGrid,

    #[error("parse error at line {line}: {message}")]
    TableParse { line: usize, message: String },

    #[error(
        "Toeplitz matrix violates positive semidefiniteness (min eigenvalue \
         {min_eigenvalue:e}); the spectral model or its tabulation is defective"
    )]
    ToeplitzNotPsd { min_eigenvalue: f64 },

    #[error("d-vector lies outside the Bell tetrahedron: min Bell weight {min_weight:e}")]
    OutsideTetrahedron { min_weight: f64 },

    #[error("beta matrix is not diagonal: max off-diagonal {max_off_diagonal:e}")]
    BetaNotDiagonal { max_off_diagonal: f64 },

    #[error("state is separable; no preserving direction is defined")]
    SeparableState,

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("no k_eff transition found in the angle scan; see the attached table")]
    NoTransitionFound {
        /// Scanned `(theta, k_eff)` table, with `None` for the
        /// fully-separable-compatible sentinel.
        table: Box<Vec<(f64, Option<i32>)>>,
    },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
