use calabi_geometry::{calabi_metric, connection_general};
use eh_geometry::{connection, eh_metric};
use forms_core::{norm_sq_at, par, twisted_dirac, ChartPoint, FormField, HermitianMetricField};

use crate::eh::eh_zero_mode;
use crate::error::ZeroModeError;
use crate::general::general_zero_mode;
use crate::mode::ZeroModeSpec;

/// `|D_𝒜σ| / |σ|` split by form degree, plus the total.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct ResidualParts {
    pub total: f64,
    /// `Λ⁰` component, the `∂̄*` equation.
    pub scalar: f64,
    /// `Λ^{0,2}` component, which the ansatz kills identically.
    pub top: f64,
}

impl ResidualParts {
    fn max(self, other: Self) -> Self {
        Self {
            total: self.total.max(other.total),
            scalar: self.scalar.max(other.scalar),
            top: self.top.max(other.top),
        }
    }
}

/// Mode, its twisting connection and the background metric.
pub fn mode_data(
    spec: &ZeroModeSpec,
) -> Result<(FormField, FormField, HermitianMetricField), ZeroModeError> {
    Ok(match spec {
        ZeroModeSpec::Eh(s) => {
            // the flat limit carries no twist
            let conn = if s.kappa() == 0.0 {
                FormField::zero(2)
            } else {
                connection(s.params(), s.ell())?
            };
            (eh_zero_mode(s), conn, eh_metric(s.params()))
        }
        ZeroModeSpec::General(s) => (
            general_zero_mode(s),
            connection_general(s.params(), s.ell()),
            calabi_metric(s.params()),
        ),
    })
}

/// Residual at one point given a precomputed `D_𝒜σ`.
pub fn residual_at(
    d_sigma: &FormField,
    sigma: &FormField,
    g: &HermitianMetricField,
    p: &ChartPoint,
) -> Result<ResidualParts, ZeroModeError> {
    let size = norm_sq_at(sigma, g, p)?.sqrt();
    let part = |q: usize| -> Result<f64, ZeroModeError> {
        Ok(norm_sq_at(&d_sigma.part(0, q), g, p)?.max(0.0).sqrt() / size)
    };
    let (scalar, top) = (part(0)?, part(2)?);
    Ok(ResidualParts { total: scalar.hypot(top), scalar, top })
}

/// Largest residual over `points`, evaluated in parallel when enabled.
pub fn max_residual(
    spec: &ZeroModeSpec,
    points: &[ChartPoint],
) -> Result<ResidualParts, ZeroModeError> {
    let (sigma, conn, g) = mode_data(spec)?;
    let d_sigma = twisted_dirac(&sigma, &conn, &g)?;
    par::map(points, |p| residual_at(&d_sigma, &sigma, &g, p))
        .into_iter()
        .try_fold(ResidualParts::default(), |acc, r| Ok(acc.max(r?)))
}
