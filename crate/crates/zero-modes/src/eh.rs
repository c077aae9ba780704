use eh_geometry::EhProfiles;
use forms_core::{FormField, ScalarField};

use crate::mode::EhModeSpec;

fn radial_01() -> FormField {
    FormField::from_antiholomorphic(vec![ScalarField::z(0), ScalarField::z(1)])
}

/// `h(s) = 1 / (F s^{2N+2} f^{ℓ/2})`, the radial factor multiplying the
/// monomial and `∂̄s`.
pub fn eh_profile(spec: &EhModeSpec) -> ScalarField {
    let pr = EhProfiles::new(spec.params());
    let s = ScalarField::s(2);
    (pr.big_f_field() * s.powi(spec.two_n() as i32 + 2)).recip()
        * pr.small_f_field().powf(-(spec.ell() as f64) / 2.0)
}

/// `σ = z₁^{N−m} z₂^{N+m} h(s) (z₁dz̄₁ + z₂dz̄₂)`.
pub fn eh_zero_mode(spec: &EhModeSpec) -> FormField {
    radial_01().scale(&(ScalarField::monomial(&spec.exponents()) * eh_profile(spec)))
}

/// Closed form `|σ|² = |z₁|^{2(N−m)} |z₂|^{2(N+m)} / (F s^{4N+3} f^ℓ)`.
pub fn eh_norm_sq(spec: &EhModeSpec) -> ScalarField {
    let pr = EhProfiles::new(spec.params());
    let mono = ScalarField::monomial(&spec.exponents());
    let s = ScalarField::s(2);
    mono.conj()
        * mono
        * (pr.big_f_field() * s.powi(2 * spec.two_n() as i32 + 3)).recip()
        * pr.small_f_field().powi(-(spec.ell() as i32))
}
