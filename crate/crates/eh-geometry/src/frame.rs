use forms_core::{ChartPoint, FormField, ScalarField};

use crate::error::EhError;
use crate::metric::EhParams;

/// Unitary (1,0)-coframe `e₁ = √(F/s)(z̄₂/z₂)(z₂dz₁ − z₁dz₂)`,
/// `e₂ = (Fs)^{-1/2}(z₂/z̄₂)(z̄₁dz₁ + z̄₂dz₂)`; singular on `z₂ = 0`.
#[derive(Clone, Debug)]
pub struct Frame {
    pub e1: FormField,
    pub e2: FormField,
}

pub const FRAME_MIN_Z2: f64 = 1e-6;

pub fn frame(params: EhParams) -> Frame {
    let big_f = params.profiles().big_f_field();
    let s = ScalarField::s(2);
    let (z1, z2) = (ScalarField::z(0), ScalarField::z(1));
    let (zb1, zb2) = (ScalarField::zbar(0), ScalarField::zbar(1));
    let c1 = (&big_f / &s).sqrt() * &zb2 / &z2;
    let c2 = (&big_f * &s).sqrt().recip() * &z2 / &zb2;
    Frame {
        e1: FormField::from_holomorphic(vec![&c1 * &z2, -(&c1 * &z1)]),
        e2: FormField::from_holomorphic(vec![&c2 * zb1, c2 * zb2]),
    }
}

impl Frame {
    /// Rejects points where the chart factor `z̄₂/z₂` is ill-conditioned.
    pub fn check_point(p: &ChartPoint) -> Result<(), EhError> {
        if p.dim() == 2 && p.coord(1).norm() >= FRAME_MIN_Z2 {
            Ok(())
        } else {
            Err(EhError::ChartSingular(format!("|z2| < {FRAME_MIN_Z2}")))
        }
    }

    /// `g_{μν̄}` rebuilt as `Σ_a e_a[μ] conj(e_a[ν])`, row-major.
    pub fn metric_at(&self, p: &ChartPoint) -> Result<Vec<forms_core::Complex64>, EhError> {
        Self::check_point(p)?;
        let rows: Vec<Vec<_>> = [&self.e1, &self.e2]
            .iter()
            .map(|e| (0..2).map(|mu| e.coefficient(&[mu], &[]).eval(p)).collect())
            .collect();
        Ok((0..4)
            .map(|k| rows.iter().map(|e| e[k / 2] * e[k % 2].conj()).sum())
            .collect())
    }
}
