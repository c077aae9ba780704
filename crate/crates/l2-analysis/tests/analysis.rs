use calabi_geometry::CalabiParams;
use eh_geometry::{eh_metric, EhParams};
use forms_core::quad::{integrate, QuadOptions};
use forms_core::{norm_sq_at, par, ChartPoint, Complex64, SampleDomain};
use l2_analysis::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use zero_modes::{
    classify_eh, classify_general, eh_zero_mode, general_zero_mode, EhModeSpec, GeneralModeSpec,
    NormClass,
};

fn opts() -> CutoffOptions {
    CutoffOptions::default()
}

/// Mean of `Π|z_i|^{2a_i}` over the unit sphere by Monte Carlo.
fn monte_carlo_average(exponents: &[u32], samples: usize, seed: u64) -> f64 {
    let chunks: Vec<u64> = (0..16).map(|k| seed * 100 + k).collect();
    let per = samples / chunks.len();
    let sums = par::map(&chunks, |&s| {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        (0..per)
            .map(|_| {
                let z: Vec<Complex64> = exponents
                    .iter()
                    .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
                    .collect();
                let s: f64 = z.iter().map(|c| c.norm_sqr()).sum();
                z.iter().zip(exponents).map(|(c, &a)| (c.norm_sqr() / s).powi(a as i32)).product::<f64>()
            })
            .sum::<f64>()
    });
    sums.iter().sum::<f64>() / (per * chunks.len()) as f64
}

#[test]
fn angular_averages_match_monte_carlo() {
    for exps in [vec![1, 1], vec![2, 0], vec![3, 2], vec![1, 1, 0], vec![2, 0, 1], vec![1, 1, 1, 1]] {
        let mc = monte_carlo_average(&exps, 1_000_000, 1);
        let closed = angular_average_multi(&exps);
        assert!((mc - closed).abs() < 1e-3, "{exps:?}: {mc} vs {closed}");
    }
    assert!((angular_average(1, 1) - 1.0 / 6.0).abs() < 1e-15);
}

#[test]
fn radial_profiles_match_engine_norms() {
    let pts = SampleDomain::default().sample(2, 20, 2);
    for (two_n, two_m, ell) in [(0, 0, 1), (1, -1, 2), (2, 2, 3)] {
        let spec = EhModeSpec::new(two_n, two_m, ell, 1.5).unwrap();
        let g = eh_metric(spec.params());
        let sigma = eh_zero_mode(&spec);
        let r = eh_radial_profile(&spec);
        let [a, b] = spec.exponents();
        for p in &pts {
            let want = p.coord(0).norm_sqr().powi(a as i32) * p.coord(1).norm_sqr().powi(b as i32) * r(p.s());
            assert!((norm_sq_at(&sigma, &g, p).unwrap() - want).abs() < 1e-10 * want);
        }
    }
    let pts = SampleDomain::default().sample(3, 10, 3);
    let spec = GeneralModeSpec::new(2, vec![1, 0, 1], 2, 2.0).unwrap();
    let g = calabi_geometry::calabi_metric(spec.params());
    let sigma = general_zero_mode(&spec);
    let r = general_radial_profile(&spec);
    for p in &pts {
        let mono = p.coord(0).norm_sqr() * p.coord(2).norm_sqr();
        let want = mono * r(p.s());
        assert!((norm_sq_at(&sigma, &g, p).unwrap() - want).abs() < 1e-9 * want);
    }
}

/// `π² ∫₀^∞ s^{1+2N} R(s) ds` on `s = t/(1−t)`, no cutoffs.
fn compactified_eh(spec: &EhModeSpec) -> f64 {
    let r = eh_radial_profile(spec);
    let d = spec.two_n() as i32;
    let q = QuadOptions { abs_tol: 1e-13, rel_tol: 1e-12, max_intervals: 4000 };
    let v = integrate(
        |t| {
            if t <= 0.0 || t >= 1.0 {
                return 0.0;
            }
            let s = t / (1.0 - t);
            s.powi(1 + d) * r(s) / (1.0 - t).powi(2)
        },
        0.0,
        1.0,
        q,
    )
    .unwrap()
    .value;
    let [a, b] = spec.exponents();
    std::f64::consts::PI.powi(2) * angular_average(a, b) * v
}

#[test]
fn eh_integrals() {
    let spec = EhModeSpec::new(0, 0, 1, 1.0).unwrap();
    let v = l2_integral_eh(&spec, opts()).unwrap();
    let value = v.value().expect("finite");
    assert!(value > 0.0);
    let oracle = compactified_eh(&spec);
    assert!((value - oracle).abs() < 1e-6 * oracle, "{value} vs {oracle}");
    let refined = l2_integral_eh(&spec, CutoffOptions { max_k: 7, ..opts() }).unwrap();
    assert!((refined.value().unwrap() - value).abs() < 1e-6 * value);

    for (two_n, two_m, ell) in [(1, 1, 2), (2, 0, 3), (3, -1, 5)] {
        let spec = EhModeSpec::new(two_n, two_m, ell, 2.0).unwrap();
        let got = l2_integral_eh(&spec, opts()).unwrap().value().unwrap();
        let oracle = compactified_eh(&spec);
        assert!((got - oracle).abs() < 1e-6 * oracle);
    }

    let untwisted = EhModeSpec::new(0, 0, 0, 1.0).unwrap();
    assert_eq!(l2_integral_eh(&untwisted, opts()).unwrap().class(), NormClass::LogDivergent);
    let heavy = EhModeSpec::new(2, 0, 1, 1.0).unwrap();
    assert_eq!(l2_integral_eh(&heavy, opts()).unwrap().class(), NormClass::PowerDivergentAtZero);
}

#[test]
fn general_integrals() {
    let finite = GeneralModeSpec::new(2, vec![0, 0, 0], 1, 1.0).unwrap();
    assert!(l2_integral_general(&finite, opts()).unwrap().value().unwrap() > 0.0);
    let log = GeneralModeSpec::new(2, vec![1, 0, 0], 1, 1.0).unwrap();
    assert_eq!(l2_integral_general(&log, opts()).unwrap().class(), NormClass::LogDivergent);
    let untwisted = GeneralModeSpec::new(3, vec![0; 4], 0, 1.0).unwrap();
    assert_eq!(l2_integral_general(&untwisted, opts()).unwrap().class(), NormClass::LogDivergent);
}

#[test]
fn n_one_general_integral_matches_eh_up_to_anchor() {
    // f_1 = (f/f(1))^{−ℓ/2}, so the general norm is f(1)^ℓ times the EH one
    let kappa = 2.0;
    let eh = EhModeSpec::new(1, 1, 3, kappa).unwrap();
    let general = GeneralModeSpec::new(1, vec![0, 1], 3, kappa).unwrap();
    let f1 = EhParams::new(kappa).unwrap().profiles().small_f(1.0).unwrap();
    let a = l2_integral_eh(&eh, opts()).unwrap().value().unwrap();
    let b = l2_integral_general(&general, opts()).unwrap().value().unwrap();
    assert!((b - a * f1.powi(3)).abs() < 1e-6 * b);
}

#[test]
fn classifier_agrees_with_quadrature() {
    let mut disagreements = Vec::new();
    for ell in 0..=5 {
        for two_n in 0..=6u32 {
            for spec in EhModeSpec::multiplet(two_n, ell, 1.0).unwrap() {
                let tag = l2_integral_eh(&spec, opts()).unwrap().class();
                if tag != classify_eh(two_n, ell).unwrap() {
                    disagreements.push(format!("eh {spec:?}: {tag}"));
                }
            }
        }
    }
    for n in [2usize, 3] {
        for degree in 0..=4u32 {
            for ell in 0..=5 {
                let mut exps = vec![0; n + 1];
                exps[0] = degree;
                let spec = GeneralModeSpec::new(n, exps, ell, 1.0).unwrap();
                let tag = l2_integral_general(&spec, opts()).unwrap().class();
                if tag != classify_general(degree, ell, n).unwrap() {
                    disagreements.push(format!("n={n} δ={degree} ℓ={ell}: {tag}"));
                }
            }
        }
    }
    assert!(disagreements.is_empty(), "{disagreements:?}");
}

#[test]
fn declared_exponents_match_slopes() {
    for (two_n, ell) in [(0, 1), (2, 1), (1, 4)] {
        let spec = EhModeSpec::new(two_n, two_n as i32, ell, 1.0).unwrap();
        let r = eh_radial_profile(&spec);
        let d = two_n as i32;
        let g = RadialIntegrand::new(move |s: f64| s.powi(1 + d) * r(s), (ell - d as i64 - 1) as f64, Decay::Power(d as f64 + 2.0));
        let (small, large) = g.numeric_slopes(1e-7, 1e6);
        let Decay::Power(q) = g.large_s else { unreachable!() };
        assert!((small - g.small_s_exponent).abs() <= 0.05 * g.small_s_exponent.abs().max(1.0));
        assert!((large + q).abs() <= 0.05 * q);
    }
}

#[test]
fn form_norms() {
    for kappa in [1.0, 3.0] {
        let v = l2_norm_form(FormKind::L2Form, 1, kappa, opts()).unwrap().value().unwrap();
        let want = 4.0 * std::f64::consts::PI.powi(2) / kappa;
        assert!((v - want).abs() < 1e-6 * want, "{v} vs {want}");
    }
    assert!(l2_norm_form(FormKind::L2Form, 2, 1.0, opts()).unwrap().value().unwrap() > 0.0);
    assert_eq!(l2_norm_form(FormKind::Beta, 1, 1.0, opts()).unwrap().class(), NormClass::LogDivergent);
    assert_eq!(l2_norm_form(FormKind::Beta, 2, 1.0, opts()).unwrap().class(), NormClass::LogDivergent);
}

#[test]
fn flux_is_quantised() {
    for (n, ell) in [(1, 1), (1, 2), (2, 3)] {
        for kappa in [1.0, 3.0, 7.0] {
            let r = flux(FluxTask::new(n, ell, kappa).unwrap()).unwrap();
            assert!((r.value - ell as f64).abs() < 1e-6, "{r:?}");
            assert_eq!(r.nearest, ell);
        }
    }
    assert!(flux(FluxTask::new(2, 0, 1.0).unwrap()).unwrap().value.abs() < 1e-12);
    assert!(FluxTask::new(1, 1, 0.0).is_err());
}

#[test]
fn flux_is_gauge_robust() {
    // i dφ for a bump φ = exp(−1/(1−ρ²)) centred at (0.3, −0.2) with radius 0.8
    let grad = |x: f64, y: f64| -> (f64, f64) {
        let (dx, dy) = ((x - 0.3) / 0.8, (y + 0.2) / 0.8);
        let rho2 = dx * dx + dy * dy;
        if rho2 >= 1.0 {
            return (0.0, 0.0);
        }
        let phi = (-1.0 / (1.0 - rho2)).exp();
        let k = -phi / (1.0 - rho2).powi(2) * 2.0 / 0.8;
        (3.0 * k * dx, 3.0 * k * dy)
    };
    let task = FluxTask::new(2, 3, 7.0).unwrap();
    let plain = flux(task).unwrap().value;
    let gauged = flux_with_gauge(task, Some(&grad)).unwrap().value;
    assert!((plain - gauged).abs() < 1e-8, "{plain} vs {gauged}");
}

#[test]
fn flux_matches_engine_section_integral() {
    for (n, ell, kappa) in [(1, 2, 3.0), (2, 3, 7.0)] {
        let task = FluxTask::new(n, ell, kappa).unwrap();
        let s: f64 = 0.5;
        let want = ell as f64 * (kappa / (s.powi(n as i32 + 1) + kappa)).powf(n as f64 / (n as f64 + 1.0));
        let got = section_flux(task, s).unwrap();
        assert!((got - want).abs() < 1e-6, "{got} vs {want}");
        let limit = section_flux_limit(task, 0.05).unwrap();
        assert!((limit - ell as f64).abs() < 1e-6, "{limit}");
    }
}

#[test]
fn eh_measure_is_flat() {
    let g = eh_metric(EhParams::new(2.0).unwrap());
    let center = ChartPoint::from_parts(&[(0.8, 0.1), (0.4, -0.5)]).unwrap();
    let (vol, err) = coordinate_ball_volume(&g, &center, 0.4, 4000, 4);
    let flat = std::f64::consts::PI.powi(2) * 0.4f64.powi(4) / 2.0;
    assert!((vol - flat).abs() < 5e-3 * flat, "{vol} ± {err} vs {flat}");
    let g3 = calabi_geometry::calabi_metric(CalabiParams::new(2, 1.0).unwrap());
    let c3 = ChartPoint::from_parts(&[(0.8, 0.1), (0.4, -0.5), (0.2, 0.6)]).unwrap();
    let (vol, _) = coordinate_ball_volume(&g3, &c3, 0.3, 2000, 5);
    let flat = std::f64::consts::PI.powi(3) * 0.3f64.powi(6) / 6.0;
    assert!((vol - flat).abs() < 5e-3 * flat);
}

#[test]
fn results_export() {
    let rows = vec![
        L2Row::new("eh N=0 m=0 l=1 k=1", &l2_integral_eh(&EhModeSpec::new(0, 0, 1, 1.0).unwrap(), opts()).unwrap()),
        L2Row::new("eh N=0 m=0 l=0 k=1", &l2_integral_eh(&EhModeSpec::new(0, 0, 0, 1.0).unwrap(), opts()).unwrap()),
    ];
    let mut csv_buf = Vec::new();
    write_results_csv(&rows, &mut csv_buf).unwrap();
    let text = String::from_utf8(csv_buf).unwrap();
    assert!(text.starts_with("spec,tag,value,error_estimate\n"));
    assert!(text.contains("LogDivergent,NaN,NaN"));
    let mut json_buf = Vec::new();
    write_results_json(&rows, &mut json_buf).unwrap();
    let parsed: serde_json::Value = serde_json::from_slice(&json_buf).unwrap();
    assert_eq!(parsed[0]["tag"], "Normalisable");
    assert!(parsed[1]["value"].is_null());
}
