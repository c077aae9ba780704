use calabi_geometry::CalabiError;
use eh_geometry::EhError;
use forms_core::FormsError;
use thiserror::Error;
use zero_modes::ZeroModeError;

#[derive(Debug, Error)]
pub enum L2Error {
    #[error("quadrature did not converge on [{a}, {b}]: {source}")]
    Quadrature { a: f64, b: f64, source: FormsError },
    #[error("flux {value} is not within {tol} of an integer")]
    NonIntegralFlux { value: f64, tol: f64 },
    #[error("kappa must be positive, got {0}")]
    NonPositiveKappa(f64),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Eh(#[from] EhError),
    #[error(transparent)]
    Calabi(#[from] CalabiError),
    #[error(transparent)]
    Modes(#[from] ZeroModeError),
    #[error(transparent)]
    Forms(#[from] FormsError),
    #[error("csv output failed: {0}")]
    Csv(#[from] csv::Error),
    #[error("json output failed: {0}")]
    Json(#[from] serde_json::Error),
}
