use forms_core::fd::fd_wirtinger;
use forms_core::{exterior_derivative, ChartPoint, Complex64, FormField, ScalarField};
use proptest::prelude::*;

fn leaf() -> impl Strategy<Value = ScalarField> {
    prop_oneof![
        (-2.0..2.0f64, -2.0..2.0f64).prop_map(|(a, b)| ScalarField::constant(Complex64::new(a, b))),
        (0..3usize).prop_map(ScalarField::z),
        (0..3usize).prop_map(ScalarField::zbar),
        Just(ScalarField::s(3)),
    ]
}

/// Expression trees that stay finite on the sampling domain.
fn field() -> impl Strategy<Value = ScalarField> {
    leaf().prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a + b),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a * b),
            inner.clone().prop_map(|a| (a * 0.2).exp()),
            inner.clone().prop_map(|a| (ScalarField::real(1.5) + (&a * a.conj())).recip()),
            inner.clone().prop_map(|a| (ScalarField::one() + (&a * a.conj())).powf(0.37)),
            inner.clone().prop_map(|a| (ScalarField::real(2.0) + (&a * a.conj())).ln()),
            inner.clone().prop_map(|a| a.conj()),
            inner.prop_map(|a| (&a * a.conj()).asinh()),
        ]
    })
}

fn point() -> impl Strategy<Value = ChartPoint> {
    proptest::collection::vec((0.2..1.5f64, -3.2..3.2f64), 3).prop_map(|polar| {
        ChartPoint::new(polar.into_iter().map(|(r, t)| Complex64::from_polar(r, t)).collect())
            .unwrap()
    })
}

fn random_form(coeffs: Vec<ScalarField>) -> FormField {
    let mut c = coeffs.into_iter();
    let mut form = FormField::scalar(3, c.next().unwrap());
    for (holo, anti) in [(vec![0], vec![]), (vec![], vec![2]), (vec![1], vec![0]), (vec![], vec![0, 1])] {
        form = form.add(&FormField::monomial(3, &holo, &anti, c.next().unwrap())).unwrap();
    }
    form
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn d_squared_vanishes(coeffs in proptest::collection::vec(field(), 5), p in point()) {
        let form = random_form(coeffs);
        let dd = exterior_derivative(&exterior_derivative(&form));
        prop_assert!(dd.max_abs_at(&p) < 1e-8);
    }

    #[test]
    fn wirtinger_matches_finite_differences(f in field(), p in point()) {
        let (dz_fd, dzbar_fd) = fd_wirtinger(|q| f.eval(q), &p);
        let dz = f.grad_z_at(&p);
        let dzbar = f.grad_zbar_at(&p);
        let scale = 1.0 + f.eval(&p).norm();
        for mu in 0..3 {
            prop_assert!((dz[mu] - dz_fd[mu]).norm() < 1e-6 * scale, "d_z{mu}: {} vs {}", dz[mu], dz_fd[mu]);
            prop_assert!((dzbar[mu] - dzbar_fd[mu]).norm() < 1e-6 * scale);
        }
    }

    #[test]
    fn conjugation_consistency(f in field(), p in point()) {
        let g = f.conj();
        for mu in 0..3 {
            let lhs = g.d_z(mu).eval(&p);
            let rhs = f.d_zbar(mu).eval(&p).conj();
            prop_assert!((lhs - rhs).norm() < 1e-12 * (1.0 + rhs.norm()));
        }
    }
}
