use forms_core::FormsError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CalabiError {
    #[error("n must be in 1..={max}, got {got}")]
    Dimension { got: usize, max: usize },
    #[error("kappa must be finite and non-negative, got {0}")]
    NegativeKappa(f64),
    #[error("this quantity degenerates at kappa = 0")]
    DegenerateKappa,
    #[error("s must be positive, got {0}")]
    NonPositiveS(f64),
    #[error(transparent)]
    Forms(#[from] FormsError),
    #[error("csv output failed: {0}")]
    Csv(#[from] csv::Error),
}
