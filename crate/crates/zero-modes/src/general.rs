use std::sync::Arc;

use calabi_geometry::CalabiParams;
use forms_core::quad::{integrate, QuadOptions};
use forms_core::{FormField, RadialProfile, ScalarField};

use crate::error::ZeroModeError;
use crate::mode::GeneralModeSpec;

const PROFILE_QUAD: QuadOptions =
    QuadOptions { abs_tol: 1e-14, rel_tol: 1e-13, max_intervals: 4000 };

/// `f_n` with `(log f_n)′ = ℓ κ^{n/(n+1)} / (2 F^n s^{n+1})` and `f_n(1) = 1`.
///
/// Written as `s^{ℓ/2} exp ∫₁^s [rate − ℓ/(2x)] dx`; the bracket is regular at
/// the origin, where `f_n ~ s^{ℓ/2}`.
#[derive(Clone, Copy, Debug)]
pub struct FnProfile {
    params: CalabiParams,
    ell: i64,
}

impl FnProfile {
    pub fn new(params: CalabiParams, ell: i64) -> Self {
        Self { params, ell }
    }

    fn regular_rate(&self, x: f64) -> f64 {
        let np1 = self.params.n() as f64 + 1.0;
        let kappa = self.params.kappa();
        let ratio = (kappa / (x.powf(np1) + kappa)).powf(self.params.n() as f64 / np1);
        0.5 * self.ell as f64 * (ratio - 1.0) / x
    }

    /// `d log f_n / ds` at a number.
    pub fn rate(&self, s: f64) -> f64 {
        let n = self.params.n() as i32;
        let big_f = self.params.profile().big_f(s).unwrap_or(f64::NAN);
        0.5 * self.ell as f64 * self.params.kappa_power() / (big_f.powi(n) * s.powi(n + 1))
    }

    pub fn try_value(&self, s: f64) -> Result<f64, ZeroModeError> {
        if !(s > 0.0 && s.is_finite()) {
            return Err(ZeroModeError::InvalidSpec(format!("f_n needs s > 0, got {s}")));
        }
        if self.ell == 0 {
            return Ok(1.0);
        }
        let tail = integrate(|x| self.regular_rate(x), 1.0, s, PROFILE_QUAD)
            .map_err(|source| ZeroModeError::Profile { s, source })?;
        Ok((0.5 * self.ell as f64 * s.ln() + tail.value).exp())
    }
}

impl RadialProfile for FnProfile {
    fn value(&self, s: f64) -> f64 {
        self.try_value(s).unwrap_or(f64::NAN)
    }

    fn log_rate(&self, arg: &ScalarField) -> ScalarField {
        let n = self.params.n() as i32;
        let np1 = n as f64 + 1.0;
        let big_f =
            (ScalarField::one() + self.params.kappa() * arg.powi(-(n + 1))).powf(1.0 / np1);
        0.5 * self.ell as f64
            * self.params.kappa_power()
            * (big_f.powi(n) * arg.powi(n + 1)).recip()
    }
}

/// `h = f_n / (F^n s^{δ+n+1})`.
pub fn general_profile(spec: &GeneralModeSpec) -> ScalarField {
    let pa = spec.params();
    let s = ScalarField::s(pa.dim());
    let n = pa.n() as i32;
    let f_n = if spec.ell() == 0 {
        ScalarField::one()
    } else {
        ScalarField::radial(Arc::new(FnProfile::new(pa, spec.ell())), &s)
    };
    f_n * (pa.profile().big_f_field().powi(n) * s.powi(spec.degree() as i32 + n + 1)).recip()
}

/// `σ = P(z) h(s) ∂̄s`.
pub fn general_zero_mode(spec: &GeneralModeSpec) -> FormField {
    let dim = spec.params().dim();
    let dbar_s = FormField::from_antiholomorphic((0..dim).map(ScalarField::z).collect());
    dbar_s.scale(&(ScalarField::monomial(spec.exponents()) * general_profile(spec)))
}

/// `F^{n+1}((δ+1)h + s h′) + n h − ℓ κ^{n/(n+1)} h F / (2 s^n)` for a radial
/// field `h`; `s h′` is taken as the Euler derivative `Σ z_μ ∂_μ h`.
pub fn ode_residual(params: CalabiParams, h: &ScalarField, degree: u32, ell: i64) -> ScalarField {
    let n = params.n() as i32;
    let dim = params.dim();
    let big_f = params.profile().big_f_field();
    let euler =
        (0..dim).fold(ScalarField::zero(), |acc, mu| acc + ScalarField::z(mu) * h.d_z(mu));
    big_f.powi(n + 1) * ((degree as f64 + 1.0) * h + euler) + n as f64 * h
        - 0.5 * ell as f64 * params.kappa_power() * h * &big_f * ScalarField::s(dim).powi(-n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profile_anchor_and_rate() {
        let pr = FnProfile::new(CalabiParams::new(2, 7.0).unwrap(), 2);
        assert!((pr.try_value(1.0).unwrap() - 1.0).abs() < 1e-15);
        for s in [0.05, 0.4, 3.0, 40.0] {
            let h = 1e-4 * s;
            let fd = (pr.value(s + h).ln() - pr.value(s - h).ln()) / (2.0 * h);
            assert!((fd - pr.rate(s)).abs() < 1e-7 * pr.rate(s).abs().max(1.0), "s={s}");
        }
        assert!(pr.try_value(0.0).is_err());
    }

    #[test]
    fn small_s_power_law() {
        let pr = FnProfile::new(CalabiParams::new(3, 2.0).unwrap(), 3);
        let (a, b) = (1e-6, 1e-5);
        let slope = (pr.value(b) / pr.value(a)).ln() / (b / a).ln();
        assert!((slope - 1.5).abs() < 1e-6);
    }
}
