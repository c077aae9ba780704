//! Metric contraction, the spin-c Dirac operator on `Λ^{0,•}`, Clifford
//! action, pointwise norms and the Hodge star on 2-forms in complex
//! dimension two.
//!
//! The Dirac operator follows the Kähler recipe: take the full exterior
//! derivative, keep the `(0, q+1)` part as `∂̄σ`, and contract the `(1, q)`
//! part with the inverse metric, which yields `−∂̄*σ`.

use num_complex::Complex64;

use crate::error::FormsError;
use crate::field::{Evaluator, ScalarField};
use crate::form::{exterior_derivative, wedge, BasisKey, FormField};
use crate::linalg;
use crate::metric::HermitianMetricField;
use crate::point::ChartPoint;

fn check_metric(form: &FormField, g: &HermitianMetricField) -> Result<(), FormsError> {
    if form.dim() == g.dim() {
        Ok(())
    } else {
        Err(FormsError::DimensionMismatch { left: form.dim(), right: g.dim() })
    }
}

fn check_spinor(sigma: &FormField) -> Result<(), FormsError> {
    if sigma.degrees().iter().all(|&(p, _)| p == 0) {
        Ok(())
    } else {
        Err(FormsError::Degree("spinor must lie in Λ^{0,•}".into()))
    }
}

/// Contracts the `dz_μ` leg of a `(1, q)`-form against each `dz̄_ν` leg with
/// `g_inv[ν][μ]`, removing `dz̄_ν` with the sign of its position. Returns a
/// `(0, q−1)`-form.
pub fn metric_contract(
    form: &FormField,
    g: &HermitianMetricField,
) -> Result<FormField, FormsError> {
    check_metric(form, g)?;
    let dim = form.dim();
    let mut out = FormField::zero(dim);
    for (key, c) in form.terms() {
        if key.holo.len() != 1 || key.anti.is_empty() {
            return Err(FormsError::Degree(format!(
                "metric_contract needs degree (1, q≥1), found {:?}",
                key.degree()
            )));
        }
        let mu = key.holo[0];
        for (pos, &nu) in key.anti.iter().enumerate() {
            let rest: Vec<usize> = key.anti.iter().copied().filter(|&j| j != nu).collect();
            let sign = if pos % 2 == 0 { 1.0 } else { -1.0 };
            let coeff = c * g.g_inv(nu, mu) * sign;
            out = out.add(&FormField::monomial(dim, &[], &rest, coeff))?;
        }
    }
    Ok(out)
}

/// `(0, q+1)` part plus the metric contraction of the `(1, q)` part. A
/// `(1, 0)` part has nothing to contract against and drops out.
fn project_to_spinor(form: &FormField, g: &HermitianMetricField) -> Result<FormField, FormsError> {
    let mixed = form.filter(|k| k.holo.len() == 1 && !k.anti.is_empty());
    let contracted = metric_contract(&mixed, g)?;
    form.holo_part(0).add(&contracted)
}

/// `D σ = ∂̄σ − ∂̄*σ` for `σ ∈ Λ^{0,•}` over a Kähler metric.
pub fn dirac(sigma: &FormField, g: &HermitianMetricField) -> Result<FormField, FormsError> {
    check_metric(sigma, g)?;
    check_spinor(sigma)?;
    project_to_spinor(&exterior_derivative(sigma), g)
}

/// `υ·σ = υ^{0,1} ∧ σ + ι_{υ♯}σ`, the contraction computed from the
/// `(1, q)` part of `υ ∧ σ`.
pub fn clifford_mul(
    upsilon: &FormField,
    sigma: &FormField,
    g: &HermitianMetricField,
) -> Result<FormField, FormsError> {
    check_metric(sigma, g)?;
    check_spinor(sigma)?;
    if upsilon.degrees().iter().any(|&(p, q)| p + q != 1) {
        return Err(FormsError::Degree("Clifford multiplier must be a 1-form".into()));
    }
    project_to_spinor(&wedge(upsilon, sigma)?, g)
}

/// `D_𝒜 σ = D σ + 𝒜·σ`.
pub fn twisted_dirac(
    sigma: &FormField,
    connection: &FormField,
    g: &HermitianMetricField,
) -> Result<FormField, FormsError> {
    dirac(sigma, g)?.add(&clifford_mul(connection, sigma, g)?)
}

fn symbolic_det(m: &[Vec<ScalarField>]) -> ScalarField {
    match m.len() {
        0 => ScalarField::one(),
        1 => m[0][0].clone(),
        n => (0..n).fold(ScalarField::zero(), |acc, col| {
            let minor: Vec<Vec<ScalarField>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(j, _)| *j != col)
                        .map(|(_, c)| c.clone())
                        .collect()
                })
                .collect();
            let term = &m[0][col] * symbolic_det(&minor);
            if col % 2 == 0 {
                acc + term
            } else {
                acc - term
            }
        }),
    }
}

/// Pairing matrices: holomorphic legs pair through `g_inv[κ][μ]`,
/// antiholomorphic legs through `g_inv[ν][λ]`.
fn pairing<T: Clone>(
    a: &BasisKey,
    b: &BasisKey,
    ginv: impl Fn(usize, usize) -> T,
) -> (Vec<Vec<T>>, Vec<Vec<T>>) {
    let holo = a.holo.iter().map(|&mu| b.holo.iter().map(|&ka| ginv(ka, mu)).collect()).collect();
    let anti = a.anti.iter().map(|&nu| b.anti.iter().map(|&la| ginv(nu, la)).collect()).collect();
    (holo, anti)
}

/// `|ω|²_g` as a real-valued field: Hermitian pairing of every pair of terms
/// with the determinant of leg pairings, so `|dz̄₁ ∧ dz̄₂|² = 1` for the flat
/// metric.
pub fn pointwise_norm_sq(
    form: &FormField,
    g: &HermitianMetricField,
) -> Result<ScalarField, FormsError> {
    check_metric(form, g)?;
    let terms: Vec<(&BasisKey, &ScalarField)> = form.terms().collect();
    let mut acc = ScalarField::zero();
    for (ka, ca) in &terms {
        for (kb, cb) in &terms {
            if ka.degree() != kb.degree() {
                continue;
            }
            let (ph, pa) = pairing(ka, kb, |i, j| g.g_inv(i, j).clone());
            acc = acc + *ca * cb.conj() * symbolic_det(&ph) * symbolic_det(&pa);
        }
    }
    Ok(acc)
}

/// Numeric `|ω|²_g` at one point; same convention as [`pointwise_norm_sq`].
pub fn norm_sq_at(
    form: &FormField,
    g: &HermitianMetricField,
    p: &ChartPoint,
) -> Result<f64, FormsError> {
    check_metric(form, g)?;
    let n = g.dim();
    let ginv = g.inverse_at(p);
    let mut ev = Evaluator::new(p);
    let vals: Vec<(&BasisKey, Complex64)> = form.terms().map(|(k, c)| (k, ev.eval(c))).collect();
    let mut acc = Complex64::new(0.0, 0.0);
    for (ka, ca) in &vals {
        for (kb, cb) in &vals {
            if ka.degree() != kb.degree() {
                continue;
            }
            let (ph, pa) = pairing(ka, kb, |i, j| ginv[i * n + j]);
            let flat = |m: Vec<Vec<Complex64>>| m.into_iter().flatten().collect::<Vec<_>>();
            let dh = linalg::det(ka.holo.len(), &flat(ph));
            let da = linalg::det(ka.anti.len(), &flat(pa));
            acc += ca * cb.conj() * dh * da;
        }
    }
    Ok(acc.re)
}

/// Hodge star on 2-forms in complex dimension two with the complex
/// orientation. `(2,0)` and `(0,2)` forms and the Kähler form are self-dual,
/// primitive `(1,1)` forms are anti-self-dual, so for a `(1,1)` form
/// `*α = (Λα) ω_g − α` with `ω_g = Σ g_{μν̄} dz_μ ∧ dz̄_ν` and
/// `Λα = Σ α_{μν̄} g_inv[ν][μ]`.
pub fn hodge_star_2(form: &FormField, g: &HermitianMetricField) -> Result<FormField, FormsError> {
    check_metric(form, g)?;
    if g.dim() != 2 {
        return Err(FormsError::Unsupported { expected: 2, got: g.dim() });
    }
    if form.degrees().iter().any(|&(p, q)| p + q != 2) {
        return Err(FormsError::Degree("hodge_star_2 acts on 2-forms".into()));
    }
    let mixed = form.part(1, 1);
    let mut trace = ScalarField::zero();
    for mu in 0..2 {
        for nu in 0..2 {
            trace = trace + mixed.coefficient(&[mu], &[nu]) * g.g_inv(nu, mu);
        }
    }
    let kahler = FormField::from_11_matrix(
        (0..2).map(|mu| (0..2).map(|nu| g.g(mu, nu).clone()).collect()).collect(),
    );
    let star_mixed = kahler.scale(&trace).sub(&mixed)?;
    form.part(2, 0).add(&form.part(0, 2))?.add(&star_mixed)
}
