mod common;

use common::{eh, points, random_coefficient, rng};
use forms_core::{
    clifford_mul, dirac, exterior_derivative, metric_contract, norm_sq_at, FormField,
    HermitianMetricField, ScalarField,
};

const TOL: f64 = 1e-10;

/// Λ⁰ and Λ^{0,2} parts of `D(β dz̄₁ + γ dz̄₂)` for a unit-determinant Kähler
/// metric, written out by hand.
fn d_minus_explicit(g: &HermitianMetricField, beta: &ScalarField, gamma: &ScalarField) -> FormField {
    let scalar = g.g(1, 1) * beta.d_z(0) - g.g(1, 0) * gamma.d_z(0) - g.g(0, 1) * beta.d_z(1)
        + g.g(0, 0) * gamma.d_z(1);
    let top = gamma.d_zbar(0) - beta.d_zbar(1);
    FormField::scalar(2, scalar).add(&FormField::monomial(2, &[], &[0, 1], top)).unwrap()
}

/// `D(α + δ dz̄₁∧dz̄₂)` written out by hand.
fn d_plus_explicit(g: &HermitianMetricField, alpha: &ScalarField, delta: &ScalarField) -> FormField {
    let c1 = alpha.d_zbar(0) - g.g(0, 0) * delta.d_z(1) + g.g(1, 0) * delta.d_z(0);
    let c2 = alpha.d_zbar(1) - g.g(0, 1) * delta.d_z(1) + g.g(1, 1) * delta.d_z(0);
    FormField::from_antiholomorphic(vec![c1, c2])
}

/// Pre-Kähler form of the scalar line, with derivatives acting on the metric.
fn d_minus_hermitian_scalar(
    g: &HermitianMetricField,
    beta: &ScalarField,
    gamma: &ScalarField,
) -> ScalarField {
    (g.g(1, 1) * beta).d_z(0) - (g.g(1, 0) * gamma).d_z(0) - (g.g(0, 1) * beta).d_z(1)
        + (g.g(0, 0) * gamma).d_z(1)
}

#[test]
fn full_derivative_matches_six_term_expansion() {
    let mut r = rng(11);
    for p in points(100, 1) {
        let beta = random_coefficient(&mut r);
        let gamma = random_coefficient(&mut r);
        let sigma = FormField::from_antiholomorphic(vec![beta.clone(), gamma.clone()]);
        let expected = FormField::monomial(2, &[0], &[0], beta.d_z(0))
            .add(&FormField::monomial(2, &[1], &[0], beta.d_z(1)))
            .and_then(|f| f.add(&FormField::monomial(2, &[0], &[1], gamma.d_z(0))))
            .and_then(|f| f.add(&FormField::monomial(2, &[1], &[1], gamma.d_z(1))))
            .and_then(|f| {
                f.add(&FormField::monomial(2, &[], &[0, 1], gamma.d_zbar(0) - beta.d_zbar(1)))
            })
            .unwrap();
        let got = exterior_derivative(&sigma);
        assert!(got.max_diff_at(&expected, &p) < TOL * (1.0 + expected.max_abs_at(&p)));
    }
}

#[test]
fn recipe_matches_explicit_chiral_formulas() {
    let mut r = rng(12);
    for kappa in [0.5, 1.0, 4.0] {
        let g = eh(kappa);
        for p in points(100, 2) {
            let [alpha, beta, gamma, delta] = std::array::from_fn(|_| random_coefficient(&mut r));
            let minus = FormField::from_antiholomorphic(vec![beta.clone(), gamma.clone()]);
            let engine = dirac(&minus, &g).unwrap();
            let explicit = d_minus_explicit(&g, &beta, &gamma);
            let scale = 1.0 + explicit.max_abs_at(&p);
            assert!(engine.max_diff_at(&explicit, &p) < TOL * scale);

            let plus = FormField::scalar(2, alpha.clone())
                .add(&FormField::monomial(2, &[], &[0, 1], delta.clone()))
                .unwrap();
            let engine = dirac(&plus, &g).unwrap();
            let explicit = d_plus_explicit(&g, &alpha, &delta);
            let scale = 1.0 + explicit.max_abs_at(&p);
            assert!(engine.max_diff_at(&explicit, &p) < TOL * scale);
        }
    }
}

#[test]
fn contracted_11_part_is_the_scalar_line() {
    let g = eh(1.0);
    let mut r = rng(13);
    for p in points(100, 3) {
        let beta = random_coefficient(&mut r);
        let gamma = random_coefficient(&mut r);
        let sigma = FormField::from_antiholomorphic(vec![beta.clone(), gamma.clone()]);
        let c = metric_contract(&exterior_derivative(&sigma).part(1, 1), &g).unwrap();
        let expected = d_minus_explicit(&g, &beta, &gamma).part(0, 0);
        assert!(c.max_diff_at(&expected, &p) < TOL * (1.0 + expected.max_abs_at(&p)));
    }
}

#[test]
fn kahler_cancellation() {
    for kappa in [0.5, 1.0, 4.0] {
        let g = eh(kappa);
        let first = g.g(1, 0).d_z(0) - g.g(0, 0).d_z(1);
        let second = g.g(1, 1).d_z(0) - g.g(0, 1).d_z(1);
        let mut r = rng(14);
        for p in points(100, 4) {
            assert!(first.eval(&p).norm() < 1e-8);
            assert!(second.eval(&p).norm() < 1e-8);
            // so the pre-Kähler formula collapses onto the Kähler one
            let beta = random_coefficient(&mut r);
            let gamma = random_coefficient(&mut r);
            let pre = d_minus_hermitian_scalar(&g, &beta, &gamma).eval(&p);
            let post = d_minus_explicit(&g, &beta, &gamma).coefficient(&[], &[]).eval(&p);
            assert!((pre - post).norm() < 1e-8 * (1.0 + post.norm()));
        }
    }
}

#[test]
fn hermitian_non_kahler_metric_breaks_cancellation() {
    // conformally flat with a non-constant factor: Hermitian but not Kähler
    let phi = ScalarField::one() + ScalarField::s(2);
    let zero = ScalarField::zero();
    let g = HermitianMetricField::new(
        vec![vec![phi.clone(), zero.clone()], vec![zero.clone(), phi.clone()]],
        vec![vec![phi.recip(), zero.clone()], vec![zero, phi.recip()]],
        &phi * &phi,
    );
    let residual = g.g(1, 1).d_z(0) - g.g(0, 1).d_z(1);
    let p = &points(1, 5)[0];
    assert!(residual.eval(p).norm() > 1e-3);
}

#[test]
fn clifford_relation_for_real_one_forms() {
    let g = eh(2.0);
    let mut r = rng(15);
    for p in points(50, 6) {
        let w = FormField::from_holomorphic(vec![random_coefficient(&mut r), random_coefficient(&mut r)]);
        let upsilon = w.add(&w.conj()).unwrap();
        let f = FormField::scalar(2, random_coefficient(&mut r));
        let twice = clifford_mul(&upsilon, &clifford_mul(&upsilon, &f, &g).unwrap(), &g).unwrap();
        let expected = f.scale(&ScalarField::real(norm_sq_at(&upsilon.part(0, 1), &g, &p).unwrap()));
        assert!(twice.max_diff_at(&expected, &p) < 1e-10 * (1.0 + expected.max_abs_at(&p)));
    }
}

#[test]
fn contact_norm_of_radial_form() {
    // |z₁dz̄₁ + z₂dz̄₂|² = F s
    let kappa = 3.0;
    let g = eh(kappa);
    let v = FormField::from_antiholomorphic(vec![ScalarField::z(0), ScalarField::z(1)]);
    for p in points(100, 7) {
        let s = p.s();
        let big_f = (1.0 + kappa / (s * s)).sqrt();
        assert!((norm_sq_at(&v, &g, &p).unwrap() - big_f * s).abs() < 1e-10 * big_f * s);
    }
}
