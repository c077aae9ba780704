use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FormsError {
    #[error("chart dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("degree mismatch: {0}")]
    Degree(String),
    #[error("non-finite chart coordinate")]
    NonFinite,
    #[error("operation requires complex dimension {expected}, got {got}")]
    Unsupported { expected: usize, got: usize },
    #[error("quadrature failed: {0}")]
    Quadrature(String),
    #[error("singular matrix")]
    Singular,
}
