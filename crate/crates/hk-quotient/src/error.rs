use eh_geometry::EhError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HkError {
    #[error("s must be positive, got {0}")]
    NonPositiveS(f64),
    #[error("kappa must be finite and non-negative, got {0}")]
    NegativeKappa(f64),
    #[error("finite-difference step {step} too large for s = {s}")]
    FdTooClose { s: f64, step: f64 },
    #[error(transparent)]
    Eh(#[from] EhError),
}
