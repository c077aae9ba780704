use forms_core::{
    exterior_derivative, ChartPoint, Complex64, FormField, ScalarField, TangentVector,
};

use crate::error::CalabiError;
use crate::metric::calabi_metric;
use crate::profile::CalabiParams;

fn radial_01(dim: usize) -> FormField {
    FormField::from_antiholomorphic((0..dim).map(ScalarField::z).collect())
}

fn two_i_d(potential: &FormField) -> FormField {
    exterior_derivative(potential).part(1, 1).scale_by(Complex64::new(0.0, 2.0))
}

/// `1/(s^{n+1} F^n)`.
fn chi(params: CalabiParams) -> ScalarField {
    let n = params.n() as i32;
    (ScalarField::s(params.dim()).powi(n + 1) * params.profile().big_f_field().powi(n)).recip()
}

/// `ω = Σ g_{μν̄} dz_μ ∧ dz̄_ν` scaled by `2i`, matching the EH normalisation.
pub fn kahler_form_general(params: CalabiParams) -> FormField {
    let g = calabi_metric(params);
    let dim = params.dim();
    FormField::from_11_matrix(
        (0..dim).map(|mu| (0..dim).map(|nu| g.g(mu, nu).clone()).collect()).collect(),
    )
    .scale_by(Complex64::new(0.0, 2.0))
}

/// `β = z·dz̄ / (s^{n+1} F^n)`, the `(0,1)` zero mode of the untwisted operator.
pub fn beta_mode(params: CalabiParams) -> FormField {
    radial_01(params.dim()).scale(&chi(params))
}

/// Closed form `|β|² = 1/(s^{2n+1} F^n)`.
pub fn beta_norm_sq(params: CalabiParams, s: f64) -> Result<f64, CalabiError> {
    let f = params.profile().big_f(s)?;
    Ok(1.0 / (s.powi(2 * params.n() as i32 + 1) * f.powi(params.n() as i32)))
}

/// `ω̃ = 2i dβ`, computed by differentiating.
pub fn l2_form_general(params: CalabiParams) -> FormField {
    two_i_d(&beta_mode(params))
}

/// `ω̃` assembled from `2i(χ′ z̄_μ z_ν + χ δ_{μν})` with `χ = 1/(s^{n+1}F^n)`
/// and `χ′ = −χ (1 + n F^{−(n+1)}) / s`.
pub fn l2_form_closed_form(params: CalabiParams) -> FormField {
    let dim = params.dim();
    let n = params.n() as i32;
    let chi = chi(params);
    let s = ScalarField::s(dim);
    let f = params.profile().big_f_field();
    let chi_prime = -(&chi * (ScalarField::one() + n as f64 * f.powi(-(n + 1))) / s);
    FormField::from_11_matrix(
        (0..dim)
            .map(|mu| {
                (0..dim)
                    .map(|nu| {
                        let off = &chi_prime * ScalarField::zbar(mu) * ScalarField::z(nu);
                        if mu == nu {
                            off + &chi
                        } else {
                            off
                        }
                    })
                    .collect()
            })
            .collect(),
    )
    .scale_by(Complex64::new(0.0, 2.0))
}

/// Eigenvalue of the coefficient matrix of `ω̃/(2i)` along `z̄`:
/// `−n / (s^{n+1} F^{2n+1})`. Transverse directions carry `χ`.
pub fn l2_form_radial_eigenvalue(params: CalabiParams, s: f64) -> Result<f64, CalabiError> {
    let f = params.profile().big_f(s)?;
    let n = params.n() as i32;
    Ok(-(n as f64) / (s.powi(n + 1) * f.powi(2 * n + 1)))
}

/// `𝒜 = ℓ(A − Ā)` with `A = κ^{n/(n+1)} β / 2`.
pub fn connection_general(params: CalabiParams, ell: i64) -> FormField {
    let a = beta_mode(params).scale_by(Complex64::new(0.5 * params.kappa_power(), 0.0));
    a.sub(&a.conj()).expect("same dimension").scale_by(Complex64::new(ell as f64, 0.0))
}

/// `2i d(z·dz̄ / F^n)`, which should equal `ω − κω̃`.
pub fn killing_dual_form(params: CalabiParams) -> FormField {
    let f_n = params.profile().big_f_field().powi(-(params.n() as i32));
    two_i_d(&radial_01(params.dim()).scale(&f_n))
}

/// `max |ω − κω̃ − 2i d(z·dz̄/F^n)|` at a point.
pub fn killing_identity_residual(
    params: CalabiParams,
    p: &ChartPoint,
) -> Result<f64, CalabiError> {
    let lhs = kahler_form_general(params)
        .sub(&l2_form_general(params).scale_by(Complex64::new(params.kappa(), 0.0)))?;
    Ok(lhs.max_diff_at(&killing_dual_form(params), p))
}

/// `s|v|² − |z̄·v|² − Σ_{i<j} |z_i v_j − z_j v_i|²`, relative to `s|v|²`.
pub fn quadratic_identity_residual(p: &ChartPoint, v: &TangentVector) -> f64 {
    let z = p.coords();
    let v = v.components();
    let lhs = p.s() * v.iter().map(|c| c.norm_sqr()).sum::<f64>();
    let radial: Complex64 = z.iter().zip(v).map(|(a, b)| a.conj() * b).sum();
    let mut rhs = radial.norm_sqr();
    for i in 0..z.len() {
        for j in i + 1..z.len() {
            rhs += (z[i] * v[j] - z[j] * v[i]).norm_sqr();
        }
    }
    (lhs - rhs).abs() / lhs.max(f64::MIN_POSITIVE)
}
