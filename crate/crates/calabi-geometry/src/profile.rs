use std::io::Write;

use forms_core::{norm_sq_at, ChartPoint, ScalarField};

use crate::error::CalabiError;
use crate::forms::{beta_mode, l2_form_general};
use crate::metric::calabi_metric;

/// Largest supported base dimension.
pub const MAX_N: usize = 8;

/// Base dimension `n` (chart dimension `n + 1`) and modulus `κ ≥ 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CalabiParams {
    n: usize,
    kappa: f64,
}

impl CalabiParams {
    pub fn new(n: usize, kappa: f64) -> Result<Self, CalabiError> {
        if n == 0 || n > MAX_N {
            return Err(CalabiError::Dimension { got: n, max: MAX_N });
        }
        if !(kappa.is_finite() && kappa >= 0.0) {
            return Err(CalabiError::NegativeKappa(kappa));
        }
        Ok(Self { n, kappa })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.n + 1
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    /// `κ^{n/(n+1)}`, the coupling in the twisting connection.
    pub fn kappa_power(&self) -> f64 {
        self.kappa.powf(self.n as f64 / (self.n as f64 + 1.0))
    }

    pub fn profile(&self) -> GeneralProfile {
        GeneralProfile { params: *self }
    }
}

/// `F(s) = (1 + κ/s^{n+1})^{1/(n+1)}` with `F′ = (F^{−n} − F)/s`.
#[derive(Clone, Copy, Debug)]
pub struct GeneralProfile {
    params: CalabiParams,
}

impl GeneralProfile {
    fn np1(&self) -> f64 {
        self.params.n as f64 + 1.0
    }

    pub fn big_f(&self, s: f64) -> Result<f64, CalabiError> {
        if !(s > 0.0 && s.is_finite()) {
            return Err(CalabiError::NonPositiveS(s));
        }
        Ok((1.0 + self.params.kappa / s.powf(self.np1())).powf(1.0 / self.np1()))
    }

    pub fn big_f_prime(&self, s: f64) -> Result<f64, CalabiError> {
        let f = self.big_f(s)?;
        Ok((f.powi(-(self.params.n as i32)) - f) / s)
    }

    /// `F − κ/(F^n s^{n+1}) − F^{−n}`.
    pub fn shift_residual(&self, s: f64) -> Result<f64, CalabiError> {
        let f = self.big_f(s)?;
        let n = self.params.n as i32;
        Ok(f - self.params.kappa / (f.powi(n) * s.powi(n + 1)) - f.powi(-n))
    }

    /// `F` as a field on ℂ^{n+1}.
    pub fn big_f_field(&self) -> ScalarField {
        let s = ScalarField::s(self.params.dim());
        (ScalarField::one() + self.params.kappa * s.powi(-(self.params.n as i32 + 1)))
            .powf(1.0 / self.np1())
    }

    pub fn big_f_prime_field(&self) -> ScalarField {
        let f = self.big_f_field();
        (f.powi(-(self.params.n as i32)) - &f) / ScalarField::s(self.params.dim())
    }
}

/// Writes `s,F,omega_tilde_norm_sq,beta_norm_sq` on the ray `(√s, 0, …, 0)`.
pub fn write_profile_csv<W: Write>(
    params: CalabiParams,
    grid: &[f64],
    out: W,
) -> Result<(), CalabiError> {
    let g = calabi_metric(params);
    let beta = beta_mode(params);
    let tilde = l2_form_general(params);
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["s", "F", "omega_tilde_norm_sq", "beta_norm_sq"])?;
    for &s in grid {
        let mut parts = vec![(0.0, 0.0); params.dim()];
        parts[0] = (s.sqrt(), 0.0);
        let p = ChartPoint::from_parts(&parts)?;
        let row = [
            s,
            params.profile().big_f(s)?,
            norm_sq_at(&tilde, &g, &p)?,
            norm_sq_at(&beta, &g, &p)?,
        ];
        w.write_record(row.map(|x| format!("{x:.12e}")))?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}
