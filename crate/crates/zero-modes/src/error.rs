use calabi_geometry::CalabiError;
use eh_geometry::EhError;
use forms_core::FormsError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ZeroModeError {
    #[error("invalid mode: {0}")]
    InvalidSpec(String),
    #[error("negative twist l = {0} is not supported")]
    NegativeEll(i64),
    #[error("kappa must be finite and non-negative, got {0}")]
    NegativeKappa(f64),
    #[error(transparent)]
    Eh(#[from] EhError),
    #[error(transparent)]
    Calabi(#[from] CalabiError),
    #[error(transparent)]
    Forms(#[from] FormsError),
    #[error("profile integration failed at s = {s}: {source}")]
    Profile { s: f64, source: FormsError },
    #[error("csv output failed: {0}")]
    Csv(#[from] csv::Error),
}
