use forms_core::{HermitianMetricField, ScalarField};

use crate::charts::BiaxialPoint;
use crate::error::EhError;
use crate::profile::EhProfiles;

/// The single EH modulus `κ ≥ 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EhParams {
    kappa: f64,
}

impl EhParams {
    pub fn new(kappa: f64) -> Result<Self, EhError> {
        if kappa.is_finite() && kappa >= 0.0 {
            Ok(Self { kappa })
        } else {
            Err(EhError::NegativeKappa(kappa))
        }
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    pub fn profiles(&self) -> EhProfiles {
        EhProfiles::new(*self)
    }
}

fn abs2(mu: usize) -> ScalarField {
    ScalarField::z(mu) * ScalarField::zbar(mu)
}

/// `g_{z₁z̄₁} = (F|z₂|² + F⁻¹|z₁|²)/s`, `g_{z₂z̄₂} = (F|z₁|² + F⁻¹|z₂|²)/s`,
/// `g_{z₁z̄₂} = (F⁻¹ − F) z₂ z̄₁ / s`; unit determinant.
pub fn eh_metric(params: EhParams) -> HermitianMetricField {
    let pr = params.profiles();
    let (big_f, s) = (pr.big_f_field(), ScalarField::s(2));
    let inv_f = big_f.recip();
    let off = (&inv_f - &big_f) / &s;
    let g = vec![
        vec![(&big_f * abs2(1) + &inv_f * abs2(0)) / &s, &off * ScalarField::zbar(0) * ScalarField::z(1)],
        vec![&off * ScalarField::zbar(1) * ScalarField::z(0), (&big_f * abs2(0) + &inv_f * abs2(1)) / &s],
    ];
    HermitianMetricField::new(g, eh_inverse(params), ScalarField::one())
}

/// Closed-form inverse: the adjugate of the unit-determinant matrix.
pub fn eh_inverse(params: EhParams) -> Vec<Vec<ScalarField>> {
    let pr = params.profiles();
    let (big_f, s) = (pr.big_f_field(), ScalarField::s(2));
    let inv_f = big_f.recip();
    let off = (&big_f - &inv_f) / &s;
    vec![
        vec![(&big_f * abs2(0) + &inv_f * abs2(1)) / &s, &off * ScalarField::zbar(0) * ScalarField::z(1)],
        vec![&off * ScalarField::zbar(1) * ScalarField::z(0), (&big_f * abs2(1) + &inv_f * abs2(0)) / &s],
    ]
}

/// The bi-axial form `(1−κ/r⁴)⁻¹dr² + (r²/4)(1−κ/r⁴)η₃² + (r²/4)(η₁²+η₂²)`
/// as a symmetric 4×4 matrix in `(r, θ, φ, ψ)`.
pub fn metric_at_biaxial(params: EhParams, p: &BiaxialPoint) -> [[f64; 4]; 4] {
    let a = 1.0 - params.kappa / p.r.powi(4);
    let q = p.r * p.r / 4.0;
    let eta = crate::charts::EtaForms::at(p.theta, p.psi);
    let mut m = [[0.0; 4]; 4];
    m[0][0] = 1.0 / a;
    for i in 0..3 {
        for j in 0..3 {
            m[i + 1][j + 1] = q * a * eta.eta3[i] * eta.eta3[j]
                + q * (eta.eta1[i] * eta.eta1[j] + eta.eta2[i] * eta.eta2[j]);
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use forms_core::ChartPoint;

    #[test]
    fn pinned_values_at_one_zero() {
        let g = eh_metric(EhParams::new(3.0).unwrap());
        let p = ChartPoint::from_parts(&[(1.0, 0.0), (0.0, 0.0)]).unwrap();
        let m = g.matrix_at(&p);
        assert!((m[0].re - 0.5).abs() < 1e-15 && (m[3].re - 2.0).abs() < 1e-15);
        assert_eq!(m[1].norm(), 0.0);
        let inv = g.inverse_at(&p);
        assert!((inv[0].re - 2.0).abs() < 1e-15 && (inv[3].re - 0.5).abs() < 1e-15);
    }

    #[test]
    fn rejects_negative_kappa() {
        assert!(EhParams::new(-1.0).is_err());
        assert!(EhParams::new(f64::NAN).is_err());
    }
}
