use calabi_geometry::{beta_mode, calabi_metric, l2_form_general, CalabiParams};
use forms_core::{norm_sq_at, ChartPoint};
use serde::Serialize;
use zero_modes::{EhModeSpec, FnProfile, GeneralModeSpec};

use crate::angular::{angular_average, angular_average_multi, sphere_constant};
use crate::error::L2Error;
use crate::radial::{integrate_radial, CutoffOptions, Decay, L2Value, RadialIntegrand};

/// `R(s)` with `|σ|² = |z₁|^{2(N−m)} |z₂|^{2(N+m)} R(s)`:
/// `R = 1/(F s^{4N+3} f^ℓ)`.
pub fn eh_radial_profile(spec: &EhModeSpec) -> impl Fn(f64) -> f64 + Send + Sync {
    let pr = spec.params().profiles();
    let (two_n, ell) = (spec.two_n() as i32, spec.ell() as i32);
    move |s: f64| {
        let (big, small) = (pr.big_f(s).unwrap_or(f64::NAN), pr.small_f(s).unwrap_or(f64::NAN));
        1.0 / (big * s.powi(2 * two_n + 3) * small.powi(ell))
    }
}

/// `∫_{ℂ²} |σ|²`. The radial integrand `s^{1+2N} R(s)` behaves like
/// `s^{ℓ−2N−1}` at the origin and `s^{−2N−2}` at infinity.
pub fn l2_integral_eh(spec: &EhModeSpec, opts: CutoffOptions) -> Result<L2Value, L2Error> {
    let r = eh_radial_profile(spec);
    let delta = spec.two_n() as i32;
    let g = RadialIntegrand::new(
        move |s: f64| s.powi(1 + delta) * r(s),
        (spec.ell() - delta as i64 - 1) as f64,
        Decay::Power(delta as f64 + 2.0),
    );
    let [a, b] = spec.exponents();
    Ok(integrate_radial(&g, opts)?.scaled(sphere_constant(2) * angular_average(a, b)))
}

/// `R(s)` with `|σ|² = |P(z)|² R(s)`: `R = f_n² / (F^n s^{2δ+2n+1})`.
pub fn general_radial_profile(spec: &GeneralModeSpec) -> impl Fn(f64) -> f64 + Send + Sync {
    let pa = spec.params();
    let f_n = FnProfile::new(pa, spec.ell());
    let (n, delta) = (pa.n() as i32, spec.degree() as i32);
    move |s: f64| {
        let big = pa.profile().big_f(s).unwrap_or(f64::NAN);
        let fv = f_n.try_value(s).unwrap_or(f64::NAN);
        fv * fv / (big.powi(n) * s.powi(2 * delta + 2 * n + 1))
    }
}

/// `∫_{ℂ^{n+1}} |σ|²`, with `f_n` normalised by `f_n(1) = 1`.
pub fn l2_integral_general(spec: &GeneralModeSpec, opts: CutoffOptions) -> Result<L2Value, L2Error> {
    let r = general_radial_profile(spec);
    let (n, delta) = (spec.params().n() as i32, spec.degree() as i32);
    let g = RadialIntegrand::new(
        move |s: f64| s.powi(n + delta) * r(s),
        (spec.ell() - delta as i64 - 1) as f64,
        Decay::Power((delta + n + 1) as f64),
    );
    let angular = angular_average_multi(spec.exponents());
    Ok(integrate_radial(&g, opts)?.scaled(sphere_constant(spec.params().dim()) * angular))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FormKind {
    /// The harmonic 2-form `ω̃`.
    L2Form,
    /// The untwisted spinor `β = ∂̄s / (s^{n+1} F^n)`.
    Beta,
}

/// `∫ |form|²` with the pointwise norm taken from the engine on the ray
/// `(√s, 0, …, 0)`; both forms are `U(n+1)`-invariant.
pub fn l2_norm_form(kind: FormKind, n: usize, kappa: f64, opts: CutoffOptions) -> Result<L2Value, L2Error> {
    if !(kappa > 0.0) {
        return Err(L2Error::NonPositiveKappa(kappa));
    }
    let pa = CalabiParams::new(n, kappa)?;
    let g = calabi_metric(pa);
    let (form, small, large) = match kind {
        FormKind::L2Form => (l2_form_general(pa), n as f64, n as f64 + 2.0),
        FormKind::Beta => (beta_mode(pa), -1.0, n as f64 + 1.0),
    };
    let dim = pa.dim();
    let integrand = RadialIntegrand::new(
        move |s: f64| {
            let mut parts = vec![(0.0, 0.0); dim];
            parts[0] = (s.sqrt(), 0.0);
            let norm = ChartPoint::from_parts(&parts)
                .ok()
                .and_then(|p| norm_sq_at(&form, &g, &p).ok())
                .unwrap_or(f64::NAN);
            s.powi(n as i32) * norm
        },
        small,
        Decay::Power(large),
    );
    Ok(integrate_radial(&integrand, opts)?.scaled(sphere_constant(dim)))
}
