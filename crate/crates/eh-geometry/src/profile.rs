use std::io::Write;

use forms_core::{norm_sq_at, ChartPoint, ScalarField};

use crate::error::EhError;
use crate::forms::{l2_form, theta3};
use crate::metric::{eh_metric, EhParams};

/// `F(s) = √(1 + κ/s²)` and `f(s) = F + √κ/s`.
#[derive(Clone, Copy, Debug)]
pub struct EhProfiles {
    params: EhParams,
}

fn check_s(s: f64) -> Result<(), EhError> {
    if s > 0.0 && s.is_finite() {
        Ok(())
    } else {
        Err(EhError::NonPositiveS(s))
    }
}

impl EhProfiles {
    pub fn new(params: EhParams) -> Self {
        Self { params }
    }

    pub fn big_f(&self, s: f64) -> Result<f64, EhError> {
        check_s(s)?;
        Ok((1.0 + self.params.kappa() / (s * s)).sqrt())
    }

    pub fn small_f(&self, s: f64) -> Result<f64, EhError> {
        Ok(self.big_f(s)? + self.params.kappa().sqrt() / s)
    }

    /// `d log f / ds = −√κ / (s² F)`.
    pub fn log_small_f_rate(&self, s: f64) -> Result<f64, EhError> {
        Ok(-self.params.kappa().sqrt() / (s * s * self.big_f(s)?))
    }

    /// `F` as a field on ℂ².
    pub fn big_f_field(&self) -> ScalarField {
        (ScalarField::one() + self.params.kappa() * ScalarField::s(2).powi(-2)).sqrt()
    }

    pub fn small_f_field(&self) -> ScalarField {
        self.big_f_field() + self.params.kappa().sqrt() * ScalarField::s(2).recip()
    }
}

/// One row of the radial profile table.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProfileRow {
    pub s: f64,
    pub big_f: f64,
    pub small_f: f64,
    pub l2_form_norm_sq: f64,
    pub theta3_norm_sq: f64,
}

impl ProfileRow {
    /// Evaluates the invariant quantities on the ray `(√s, 0)`; `|ω̃|²` is
    /// NaN at `κ = 0`.
    pub fn at(params: EhParams, s: f64) -> Result<Self, EhError> {
        let pr = params.profiles();
        let g = eh_metric(params);
        let p = ChartPoint::from_parts(&[(s.sqrt(), 0.0), (0.0, 0.0)])?;
        let l2 = match l2_form(params) {
            Ok(w) => norm_sq_at(&w, &g, &p)?,
            Err(EhError::DegenerateKappa) => f64::NAN,
            Err(e) => return Err(e),
        };
        Ok(Self {
            s,
            big_f: pr.big_f(s)?,
            small_f: pr.small_f(s)?,
            l2_form_norm_sq: l2,
            theta3_norm_sq: norm_sq_at(&theta3(params), &g, &p)?,
        })
    }
}

/// Writes `s,F,f,omega_tilde_norm_sq,theta3_norm_sq` over the given grid.
pub fn write_profile_csv<W: Write>(
    params: EhParams,
    grid: &[f64],
    out: W,
) -> Result<Vec<ProfileRow>, EhError> {
    let rows: Vec<ProfileRow> =
        grid.iter().map(|&s| ProfileRow::at(params, s)).collect::<Result<_, _>>()?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["s", "F", "f", "omega_tilde_norm_sq", "theta3_norm_sq"])?;
    for r in &rows {
        w.write_record(
            [r.s, r.big_f, r.small_f, r.l2_form_norm_sq, r.theta3_norm_sq].map(|x| format!("{x:.12e}")),
        )?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pinned_profile_values() {
        let pr = EhParams::new(3.0).unwrap().profiles();
        assert_eq!(pr.big_f(1.0).unwrap(), 2.0);
        assert!((pr.small_f(1.0).unwrap() - (2.0 + 3f64.sqrt())).abs() < 1e-15);
        let flat = EhParams::new(0.0).unwrap().profiles();
        assert_eq!((flat.big_f(0.7).unwrap(), flat.small_f(0.7).unwrap()), (1.0, 1.0));
        assert!(pr.big_f(0.0).is_err() && pr.big_f(-1.0).is_err());
    }

    #[test]
    fn csv_has_header_and_rows() {
        let mut buf = Vec::new();
        write_profile_csv(EhParams::new(1.0).unwrap(), &[0.5, 1.0, 2.0], &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("s,F,f,omega_tilde_norm_sq,theta3_norm_sq\n"));
        assert_eq!(text.lines().count(), 4);
    }
}
