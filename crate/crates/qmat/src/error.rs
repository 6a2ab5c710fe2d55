use thiserror::Error;

/// Errors produced by matrix and operator constructors and operations.
#[derive(Debug, Clone, Error)]
pub enum QmatError {
    #[error("entry count {len} does not match {rows}x{cols}")]
    ShapeMismatch { rows: usize, cols: usize, len: usize },

    #[error("matrix entries must be finite")]
    NonFinite,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("operator is not Hermitian: defect {defect:.3e} exceeds tolerance {tol:.1e}")]
    NotHermitian { defect: f64, tol: f64 },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("subsystem dims {dims:?} (product {product}) do not match operator dimension {dim}")]
    InconsistentShape {
        dims: Vec<usize>,
        product: usize,
        dim: usize,
    },

    #[error("subsystem index {index} out of range for {count} tensor factors")]
    BadSubsystemIndex { index: usize, count: usize },

    #[error("subsystem dims must be positive")]
    EmptyShape,
}
