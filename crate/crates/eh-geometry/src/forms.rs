use forms_core::{exterior_derivative, Complex64, FormField, ScalarField};

use crate::error::EhError;
use crate::metric::EhParams;

/// `z₁dz̄₁ + z₂dz̄₂`.
pub(crate) fn radial_01() -> FormField {
    FormField::from_antiholomorphic(vec![ScalarField::z(0), ScalarField::z(1)])
}

fn two_i_d(potential: &FormField) -> FormField {
    // the (0,2) part of d(h(s) z·dz̄) is h′ (z·dz̄)∧(z·dz̄) = 0; drop it exactly
    exterior_derivative(potential).part(1, 1).scale_by(Complex64::new(0.0, 2.0))
}

/// `ω = 2i d(F z·dz̄)`.
pub fn kahler_form(params: EhParams) -> FormField {
    two_i_d(&radial_01().scale(&params.profiles().big_f_field()))
}

/// `ω̃ = 2i d[z·dz̄ / (F s²)]`, the L² anti-self-dual harmonic form.
pub fn l2_form(params: EhParams) -> Result<FormField, EhError> {
    if params.kappa() == 0.0 {
        return Err(EhError::DegenerateKappa);
    }
    let coeff = (params.profiles().big_f_field() * ScalarField::s(2).powi(2)).recip();
    Ok(two_i_d(&radial_01().scale(&coeff)))
}

/// `θ₃ = (i/2F)(z·dz̄ − z̄·dz) = F⁻¹ Im(z̄·dz)`, metric dual of the fibre
/// rotation.
pub fn theta3(params: EhParams) -> FormField {
    let holo = FormField::from_holomorphic(vec![ScalarField::zbar(0), ScalarField::zbar(1)]);
    let inv_f = params.profiles().big_f_field().recip();
    radial_01()
        .sub(&holo)
        .expect("same dimension")
        .scale(&(inv_f * Complex64::new(0.0, 0.5)))
}

/// `−½ sinh⁻¹(√κ/s)`, whose `∂̄` is the connection potential `A`.
pub fn connection_potential(params: EhParams) -> ScalarField {
    (params.kappa().sqrt() * ScalarField::s(2).recip()).asinh() * -0.5
}

/// `𝒜 = ℓ(A − Ā)` with `A = √κ (z·dz̄) / (2 s² F)`.
pub fn connection(params: EhParams, ell: i64) -> Result<FormField, EhError> {
    if params.kappa() == 0.0 {
        return Err(EhError::DegenerateKappa);
    }
    let coeff = params.kappa().sqrt()
        * (2.0 * params.profiles().big_f_field() * ScalarField::s(2).powi(2)).recip();
    let a = radial_01().scale(&coeff);
    Ok(a.sub(&a.conj())?.scale_by(Complex64::new(ell as f64, 0.0)))
}
