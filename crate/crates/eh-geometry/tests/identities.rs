use eh_geometry::{
    connection, connection_potential, eh_metric, frame, kahler_form, l2_form, theta3, EhParams,
};
use forms_core::fd::{fd_derivative, fd_wirtinger};
use forms_core::linalg;
use forms_core::{
    exterior_derivative, hodge_star_2, norm_sq_at, sample_tangents, wedge, ChartPoint, Complex64,
    FormField, SampleDomain, ScalarField,
};

const KAPPAS: [f64; 3] = [0.5, 1.0, 4.0];

fn params(kappa: f64) -> EhParams {
    EhParams::new(kappa).unwrap()
}

fn points(seed: u64) -> Vec<ChartPoint> {
    SampleDomain::default().sample(2, 100, seed)
}

fn big_f(kappa: f64, p: &ChartPoint) -> f64 {
    params(kappa).profiles().big_f(p.s()).unwrap()
}

#[test]
fn unit_determinant_and_inverse() {
    for kappa in KAPPAS {
        let g = eh_metric(params(kappa));
        for p in points(1) {
            let m = g.matrix_at(&p);
            assert!((linalg::det(2, &m) - Complex64::new(1.0, 0.0)).norm() < 1e-10);
            assert!(g.inverse_residual(&p) < 1e-10);
            let numeric = linalg::inverse(2, &m).unwrap();
            assert!(linalg::max_abs_diff(&numeric, &g.inverse_at(&p)) < 1e-10);
            assert!(linalg::hermitian_residual(2, &m) < 1e-14);
            assert!(linalg::is_positive_definite(2, &m));
        }
    }
}

#[test]
fn flat_limit_is_identity() {
    let g = eh_metric(params(0.0));
    for p in points(2) {
        assert!(linalg::max_abs_diff(&g.matrix_at(&p), &linalg::identity(2)) < 1e-12);
        assert!(linalg::max_abs_diff(&g.inverse_at(&p), &linalg::identity(2)) < 1e-12);
    }
}

#[test]
fn pinned_inverse_entry() {
    let g = eh_metric(params(3.0));
    let p = ChartPoint::from_parts(&[(1.0, 0.0), (1.0, 0.0)]).unwrap();
    let f2 = 7f64.sqrt() / 2.0;
    let expected = (f2 - 1.0 / f2) / 2.0;
    assert!((g.inverse_at(&p)[1] - Complex64::new(expected, 0.0)).norm() < 1e-14);
    let numeric = linalg::inverse(2, &g.matrix_at(&p)).unwrap();
    assert!((numeric[1].re - expected).abs() < 1e-14);
}

#[test]
fn profile_identities() {
    for kappa in KAPPAS {
        let pr = params(kappa).profiles();
        for k in 0..50 {
            let s = 0.2 * 1.1f64.powi(k);
            let (big, small) = (pr.big_f(s).unwrap(), pr.small_f(s).unwrap());
            // on the ray (√s, 0): ∂_{z₁}F = F′(s) z̄₁
            let ray = ChartPoint::from_parts(&[(s.sqrt(), 0.0), (0.0, 0.0)]).unwrap();
            let dfs = pr.big_f_field().d_z(0).eval(&ray).re * s.sqrt();
            assert!((dfs - (1.0 / big - big)).abs() < 1e-12 * big);
            assert!((small - 1.0 / small - 2.0 * kappa.sqrt() / s).abs() < 1e-12);
            assert!((small + 1.0 / small - 2.0 * big).abs() < 1e-12);
            let rate = fd_derivative(|x| pr.small_f(x).unwrap().ln(), s);
            let exact = pr.log_small_f_rate(s).unwrap();
            assert!((rate - exact).abs() < 1e-8 * (1.0 + exact.abs()), "{rate} vs {exact}");
        }
    }
}

#[test]
fn kahler_form_closed_self_dual_positive() {
    for kappa in KAPPAS {
        let pa = params(kappa);
        let (g, omega) = (eh_metric(pa), kahler_form(pa));
        let d_omega = exterior_derivative(&omega);
        let star = hodge_star_2(&omega, &g).unwrap();
        let tangents = sample_tangents(2, 100, 3);
        for (p, x) in points(3).iter().zip(&tangents) {
            assert!(d_omega.max_abs_at(p) < 1e-8);
            assert!(star.max_diff_at(&omega, p) < 1e-8);
            let val = omega.on_vectors(p, &[x.clone(), x.rotate()]);
            assert!(val.re > 0.0 && val.im.abs() < 1e-12);
        }
    }
}

#[test]
fn l2_form_closed_anti_self_dual() {
    for kappa in KAPPAS {
        let pa = params(kappa);
        let (g, tilde) = (eh_metric(pa), l2_form(pa).unwrap());
        let d_tilde = exterior_derivative(&tilde);
        let star = hodge_star_2(&tilde, &g).unwrap();
        for p in points(4) {
            assert!(d_tilde.max_abs_at(&p) < 1e-8);
            let scale = 1.0 + tilde.max_abs_at(&p);
            assert!(star.max_diff_at(&tilde.scale_by(Complex64::new(-1.0, 0.0)), &p) < 1e-8 * scale);
        }
    }
    assert!(l2_form(params(0.0)).is_err());
}

#[test]
fn l2_form_norm_is_constant_multiple_of_decay() {
    // the determinant-of-pairings norm gives |ω̃|² (sF)⁴ = 8 at every point
    for kappa in KAPPAS {
        let pa = params(kappa);
        let (g, tilde) = (eh_metric(pa), l2_form(pa).unwrap());
        for p in points(5) {
            let sf = p.s() * big_f(kappa, &p);
            let ratio = norm_sq_at(&tilde, &g, &p).unwrap() * sf.powi(4);
            assert!((ratio - 8.0).abs() < 1e-9, "{ratio}");
        }
    }
}

#[test]
fn killing_dual_splits_into_kahler_and_l2() {
    for kappa in KAPPAS {
        let pa = params(kappa);
        let g = eh_metric(pa);
        let d_theta = exterior_derivative(&theta3(pa));
        let (omega, tilde) = (kahler_form(pa), l2_form(pa).unwrap());
        let rhs = omega.sub(&tilde.scale_by(Complex64::new(kappa, 0.0))).unwrap();
        let star = hodge_star_2(&d_theta, &g).unwrap();
        for p in points(6) {
            let scale = 1.0 + rhs.max_abs_at(&p);
            assert!(d_theta.scale_by(Complex64::new(2.0, 0.0)).max_diff_at(&rhs, &p) < 1e-9 * scale);
            assert!(star.add(&d_theta).unwrap().max_diff_at(&omega, &p) < 1e-9 * scale);
            let asd = star.sub(&d_theta).unwrap();
            assert!(asd.max_diff_at(&tilde.scale_by(Complex64::new(kappa, 0.0)), &p) < 1e-9 * scale);
        }
    }
    let flat = params(0.0);
    let d_theta = exterior_derivative(&theta3(flat)).scale_by(Complex64::new(2.0, 0.0));
    for p in points(7) {
        assert!(d_theta.max_diff_at(&kahler_form(flat), &p) < 1e-12);
    }
}

#[test]
fn connection_properties() {
    for kappa in KAPPAS {
        let pa = params(kappa);
        let g = eh_metric(pa);
        let ell = 2;
        let conn = connection(pa, ell).unwrap();
        let curvature = exterior_derivative(&conn);
        let tilde = l2_form(pa).unwrap();
        let expected = tilde.scale_by(Complex64::new(0.0, -0.5 * ell as f64 * kappa.sqrt()));
        let star = hodge_star_2(&curvature, &g).unwrap();
        let with_omega = wedge(&curvature, &kahler_form(pa)).unwrap();
        let potential = connection_potential(pa);
        let a = connection(pa, 1).unwrap().part(0, 1);
        for p in points(8) {
            let scale = 1.0 + curvature.max_abs_at(&p);
            assert!(conn.add(&conn.conj()).unwrap().max_abs_at(&p) < 1e-14);
            assert!(curvature.max_diff_at(&expected, &p) < 1e-10 * scale);
            assert!(star.add(&curvature).unwrap().max_abs_at(&p) < 1e-8 * scale);
            assert!(with_omega.max_abs_at(&p) < 1e-8 * scale);
            assert!(exterior_derivative(&curvature).max_abs_at(&p) < 1e-8 * scale);
            let (_, dzbar) = fd_wirtinger(|q| potential.eval(q), &p);
            for mu in 0..2 {
                let c = a.coefficient(&[], &[mu]).eval(&p);
                assert!((c - dzbar[mu]).norm() < 1e-7 * (1.0 + c.norm()));
            }
        }
        assert!(connection(pa, 0).unwrap().is_empty());
    }
}

fn frame_pairing(a: &FormField, b: &FormField, ginv: &[Complex64], p: &ChartPoint) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for mu in 0..2 {
        for ka in 0..2 {
            acc += a.coefficient(&[mu], &[]).eval(p) * b.coefficient(&[ka], &[]).eval(p).conj()
                * ginv[ka * 2 + mu];
        }
    }
    acc
}

#[test]
fn frame_is_unitary_and_rebuilds_the_forms() {
    for kappa in KAPPAS {
        let pa = params(kappa);
        let g = eh_metric(pa);
        let fr = frame(pa);
        let two_i = Complex64::new(0.0, 2.0);
        let e11 = wedge(&fr.e1, &fr.e1.conj()).unwrap();
        let e22 = wedge(&fr.e2, &fr.e2.conj()).unwrap();
        let omega = e11.add(&e22).unwrap().scale_by(two_i);
        let sf2 = (ScalarField::s(2) * pa.profiles().big_f_field()).powi(-2);
        let tilde = e11.sub(&e22).unwrap().scale(&sf2).scale_by(two_i);
        for p in points(9) {
            let ginv = g.inverse_at(&p);
            assert!((frame_pairing(&fr.e1, &fr.e1, &ginv, &p).re - 1.0).abs() < 1e-12);
            assert!((frame_pairing(&fr.e2, &fr.e2, &ginv, &p).re - 1.0).abs() < 1e-12);
            assert!(frame_pairing(&fr.e1, &fr.e2, &ginv, &p).norm() < 1e-12);
            let rebuilt = fr.metric_at(&p).unwrap();
            assert!(linalg::max_abs_diff(&rebuilt, &g.matrix_at(&p)) < 1e-10);
            assert!(omega.max_diff_at(&kahler_form(pa), &p) < 1e-10 * (1.0 + omega.max_abs_at(&p)));
            let l2 = l2_form(pa).unwrap();
            assert!(tilde.max_diff_at(&l2, &p) < 1e-10 * (1.0 + l2.max_abs_at(&p)));
        }
    }
    let fr = frame(params(0.0));
    let p = ChartPoint::from_parts(&[(1.0, 0.0), (1.0, 0.0)]).unwrap();
    let k = 1.0 / 2f64.sqrt();
    assert!((fr.e1.coefficient(&[0], &[]).eval(&p).re - k).abs() < 1e-15);
    assert!((fr.e1.coefficient(&[1], &[]).eval(&p).re + k).abs() < 1e-15);
    let on_axis = ChartPoint::from_parts(&[(1.0, 0.0), (1e-9, 0.0)]).unwrap();
    assert!(fr.metric_at(&on_axis).is_err());
}
