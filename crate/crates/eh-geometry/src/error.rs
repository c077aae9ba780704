use forms_core::FormsError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EhError {
    #[error("kappa must be finite and non-negative, got {0}")]
    NegativeKappa(f64),
    #[error("this quantity degenerates at kappa = 0")]
    DegenerateKappa,
    #[error("s must be positive, got {0}")]
    NonPositiveS(f64),
    #[error("chart singular here: {0}")]
    ChartSingular(String),
    #[error("point lies on the branch cut of sqrt(zeta): {0}")]
    BranchCut(String),
    #[error(transparent)]
    Forms(#[from] FormsError),
    #[error("csv output failed: {0}")]
    Csv(#[from] csv::Error),
}
