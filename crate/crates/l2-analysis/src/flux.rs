use calabi_geometry::{connection_general, CalabiParams};
use forms_core::quad::{integrate, QuadOptions};
use forms_core::{exterior_derivative, ChartPoint, Complex64, TangentVector};
use serde::Serialize;

use crate::error::L2Error;

const FLUX_TOL: f64 = 1e-6;
const QUAD: QuadOptions = QuadOptions { abs_tol: 1e-11, rel_tol: 1e-11, max_intervals: 2000 };

/// Flux of `𝒜 = ℓ(A − Ā)` on the Calabi space of base dimension `n`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct FluxTask {
    pub n: usize,
    pub ell: i64,
    pub kappa: f64,
}

impl FluxTask {
    pub fn new(n: usize, ell: i64, kappa: f64) -> Result<Self, L2Error> {
        if !(kappa > 0.0 && kappa.is_finite()) {
            return Err(L2Error::NonPositiveKappa(kappa));
        }
        CalabiParams::new(n, kappa)?;
        Ok(Self { n, ell, kappa })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct FluxResult {
    pub value: f64,
    pub error: f64,
    pub nearest: i64,
}

/// `∫_{ℂ} density(x, y) dx dy` over the `w`-plane, compactified radially by
/// `r = t/(1 − t)`.
fn plane_integral(density: impl Fn(f64, f64) -> f64) -> Result<(f64, f64), L2Error> {
    let tau = std::f64::consts::TAU;
    let inner_err = std::cell::Cell::new(0.0f64);
    let outer = integrate(
        |t| {
            if t >= 1.0 {
                return 0.0;
            }
            let r = t / (1.0 - t);
            let jac = r / (1.0 - t).powi(2);
            match integrate(|th| density(r * th.cos(), r * th.sin()), 0.0, tau, QUAD) {
                Ok(q) => {
                    inner_err.set(inner_err.get().max(q.error * jac));
                    q.value * jac
                }
                Err(_) => f64::NAN,
            }
        },
        0.0,
        1.0,
        QUAD,
    )
    .map_err(|source| L2Error::Quadrature { a: 0.0, b: 1.0, source })?;
    Ok((outer.value, outer.error + inner_err.get()))
}

/// `∂_x a_y − ∂_y a_x` by central differences.
fn curl(ax: &impl Fn(f64, f64) -> Complex64, ay: &impl Fn(f64, f64) -> Complex64, x: f64, y: f64) -> Complex64 {
    let h = 1e-5 * (1.0 + x.hypot(y));
    (ay(x + h, y) - ay(x - h, y) - ax(x, y + h) + ax(x, y - h)) / (2.0 * h)
}

fn finish(value: f64, error: f64) -> Result<FluxResult, L2Error> {
    let nearest = value.round();
    if (value - nearest).abs() > FLUX_TOL {
        return Err(L2Error::NonIntegralFlux { value, tol: FLUX_TOL });
    }
    Ok(FluxResult { value, error, nearest: nearest as i64 })
}

/// `(i/2π) ∫_Σ d𝒜` over the generator sphere, in its `w`-chart. On `Σ`,
/// `ω̃ = −2i dα / ((n+1) κ^{n/(n+1)})` with `α = i(n+1) Im(w̄ dw)/(1+|w|²)`,
/// so `𝒜|_Σ = −ℓ α/(n+1)` up to an exact term. The curl is taken
/// numerically; `gauge` adds `i dφ` for a real `φ` given by its gradient.
pub fn flux_with_gauge(
    task: FluxTask,
    gauge: Option<&dyn Fn(f64, f64) -> (f64, f64)>,
) -> Result<FluxResult, L2Error> {
    let np1 = task.n as f64 + 1.0;
    // α = i(n+1)(x dy − y dx)/(1 + r²)
    let alpha = |x: f64, y: f64| {
        let c = Complex64::new(0.0, np1) / (1.0 + x * x + y * y);
        (c * (-y), c * x)
    };
    let scale = -(task.ell as f64) / np1;
    let shift = |x: f64, y: f64| gauge.map_or((0.0, 0.0), |g| g(x, y));
    let ax = |x: f64, y: f64| alpha(x, y).0 * scale + Complex64::new(0.0, shift(x, y).0);
    let ay = |x: f64, y: f64| alpha(x, y).1 * scale + Complex64::new(0.0, shift(x, y).1);
    // (i/2π) × (purely imaginary curl) is real
    let (value, error) = plane_integral(|x, y| -curl(&ax, &ay, x, y).im / std::f64::consts::TAU)?;
    finish(value, error)
}

pub fn flux(task: FluxTask) -> Result<FluxResult, L2Error> {
    flux_with_gauge(task, None)
}

/// `(i/2π) ∫ d𝒜` pulled back by the engine along the section
/// `z = √s (w, 0, …, 0, 1)/√(1+|w|²)` of the sphere of radius `√s`. Equals
/// `ℓ (κ/(s^{n+1}+κ))^{n/(n+1)}` and tends to the flux as `s → 0`.
pub fn section_flux(task: FluxTask, s: f64) -> Result<f64, L2Error> {
    let pa = CalabiParams::new(task.n, task.kappa)?;
    let curvature = exterior_derivative(&connection_general(pa, task.ell));
    let dim = pa.dim();
    let section = |x: f64, y: f64| -> Vec<Complex64> {
        let rho = (s / (1.0 + x * x + y * y)).sqrt();
        let mut z = vec![Complex64::new(0.0, 0.0); dim];
        z[0] = Complex64::new(x, y) * rho;
        z[dim - 1] = Complex64::new(rho, 0.0);
        z
    };
    let density = |x: f64, y: f64| -> f64 {
        let h = 1e-6 * (1.0 + x.hypot(y));
        let diff = |a: Vec<Complex64>, b: Vec<Complex64>| {
            TangentVector::new(a.iter().zip(&b).map(|(u, v)| (u - v) / (2.0 * h)).collect())
        };
        let tx = diff(section(x + h, y), section(x - h, y));
        let ty = diff(section(x, y + h), section(x, y - h));
        let Ok(p) = ChartPoint::new(section(x, y)) else { return f64::NAN };
        (Complex64::new(0.0, 1.0) * curvature.on_vectors(&p, &[tx, ty])).re / std::f64::consts::TAU
    };
    Ok(plane_integral(density)?.0)
}

/// Richardson extrapolation of [`section_flux`] in `s^{n+1}` from `s` and `s/2`.
pub fn section_flux_limit(task: FluxTask, s: f64) -> Result<f64, L2Error> {
    let (a, b) = (section_flux(task, s)?, section_flux(task, 0.5 * s)?);
    let w = 2f64.powi(task.n as i32 + 1);
    Ok((w * b - a) / (w - 1.0))
}
