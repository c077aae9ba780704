use anyhow::{ensure, Result};
use eh_geometry::{
    eh_metric, kahler_form, l2_form, metric_at_biaxial, theta3, BiaxialPoint, BundlePoint, EhParams,
};
use forms_core::{
    exterior_derivative, hodge_star_2, linalg, norm_sq_at, ChartPoint, Complex64, SampleDomain,
    TangentVector,
};

use super::{points, worst, Checks};
use crate::config::RunConfig;
use crate::report::CheckRecord;

/// Constant value of `|ω̃|² (sF)⁴` in the determinant-of-pairings norm.
pub const L2_FORM_DECAY_CONSTANT: f64 = 8.0;

fn sign_distance(a: &ChartPoint, b: &ChartPoint) -> f64 {
    let d = |sign: f64| (0..2).map(|i| (a.coord(i) - sign * b.coord(i)).norm()).fold(0.0, f64::max);
    d(1.0).min(d(-1.0))
}

/// `max |ω̃|²(sF)⁴` deviation from `target` over the sample.
pub fn l2_form_decay_deviation(cfg: &RunConfig, target: f64) -> Result<(f64, f64)> {
    let pa = EhParams::new(cfg.kappa)?;
    let (g, tilde) = (eh_metric(pa), l2_form(pa)?);
    let pts = points(2, cfg, 5);
    let ratios = forms_core::par::map(&pts, |p| -> Result<f64> {
        let sf = p.s() * pa.profiles().big_f(p.s())?;
        Ok(norm_sq_at(&tilde, &g, p)? * sf.powi(4))
    });
    let ratios = ratios.into_iter().collect::<Result<Vec<_>>>()?;
    let dev = ratios.iter().map(|r| (r - target).abs()).fold(0.0, f64::max);
    let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
    Ok((dev, mean))
}

pub fn run(cfg: &RunConfig) -> Vec<CheckRecord> {
    let mut c = Checks::new(cfg);
    let kappa = cfg.kappa;
    let pts = points(2, cfg, 1);
    let n = pts.len();

    c.check("eh.det_unit", "det g = 1", 1e-10, || {
        let g = eh_metric(EhParams::new(kappa)?);
        let r = worst(&pts, |p| Ok((linalg::det(2, &g.matrix_at(p)) - Complex64::new(1.0, 0.0)).norm()))?;
        Ok((r, format!("{n} points, kappa = {kappa}")))
    });
    c.check("eh.inverse", "closed-form inverse = numeric inverse", 1e-10, || {
        let g = eh_metric(EhParams::new(kappa)?);
        let r = worst(&pts, |p| {
            Ok(linalg::max_abs_diff(&linalg::inverse(2, &g.matrix_at(p))?, &g.inverse_at(p)))
        })?;
        Ok((r, format!("{n} points")))
    });
    c.check("eh.kahler_closed", "d omega = 0", 1e-8, || {
        let d = exterior_derivative(&kahler_form(EhParams::new(kappa)?));
        Ok((worst(&pts, |p| Ok(d.max_abs_at(p)))?, format!("{n} points")))
    });
    c.check("eh.kahler_self_dual", "*omega = omega", 1e-8, || {
        let pa = EhParams::new(kappa)?;
        let omega = kahler_form(pa);
        let star = hodge_star_2(&omega, &eh_metric(pa))?;
        let r = worst(&pts, |p| Ok(star.max_diff_at(&omega, p) / (1.0 + omega.max_abs_at(p))))?;
        Ok((r, "relative to 1 + |omega|".into()))
    });
    c.check("eh.l2_form_closed", "d omega-tilde = 0", 1e-8, || {
        let d = exterior_derivative(&l2_form(EhParams::new(kappa)?)?);
        Ok((worst(&pts, |p| Ok(d.max_abs_at(p)))?, format!("{n} points")))
    });
    c.check("eh.l2_form_anti_self_dual", "*omega-tilde = -omega-tilde", 1e-8, || {
        let pa = EhParams::new(kappa)?;
        let tilde = l2_form(pa)?;
        let star = hodge_star_2(&tilde, &eh_metric(pa))?;
        let r = worst(&pts, |p| Ok(star.add(&tilde)?.max_abs_at(p) / (1.0 + tilde.max_abs_at(p))))?;
        Ok((r, "relative to 1 + |omega-tilde|".into()))
    });
    c.check("eh.killing_split", "2 d theta_3 = omega - kappa omega-tilde", 1e-9, || {
        let pa = EhParams::new(kappa)?;
        let lhs = exterior_derivative(&theta3(pa)).scale_by(Complex64::new(2.0, 0.0));
        let rhs = kahler_form(pa).sub(&l2_form(pa)?.scale_by(Complex64::new(kappa, 0.0)))?;
        let r = worst(&pts, |p| Ok(lhs.max_diff_at(&rhs, p) / (1.0 + rhs.max_abs_at(p))))?;
        Ok((r, "relative to 1 + |rhs|".into()))
    });
    c.check("eh.l2_form_decay", "|omega-tilde|^2 (sF)^4 = 8", 1e-10, || {
        let (dev, mean) = l2_form_decay_deviation(cfg, L2_FORM_DECAY_CONSTANT)?;
        Ok((dev / L2_FORM_DECAY_CONSTANT, format!("mean constant {mean:.15}; relative deviation")))
    });
    c.check("eh.bundle_round_trip", "z -> (w, zeta) -> z up to sign", 1e-12, || {
        let r = worst(&pts, |p| Ok(sign_distance(p, &BundlePoint::from_z(p)?.to_z()?)))?;
        Ok((r, format!("{n} points")))
    });
    c.check("eh.biaxial_round_trip", "z -> (r, theta, phi, psi) -> z up to sign", 1e-12, || {
        let pa = EhParams::new(kappa)?;
        let r = worst(&pts, |p| Ok(sign_distance(p, &BiaxialPoint::from_z(pa, p)?.to_z(pa)?)))?;
        Ok((r, format!("{n} points")))
    });
    c.check("eh.biaxial_pullback", "bi-axial metric = pullback of g", 1e-8, || {
        let pa = EhParams::new(kappa)?;
        let g = eh_metric(pa);
        let mut worst_rel: f64 = 0.0;
        let mut pairs = 0;
        // 20 pairs regardless of the sample size
        let candidates = SampleDomain::default().sample(2, 200, cfg.seed.wrapping_mul(1000).wrapping_add(9));
        for p in &candidates {
            let b = BiaxialPoint::from_z(pa, p)?;
            if b.cut_distance() < 0.1 || b.theta < 0.1 || b.theta > 3.0 {
                continue;
            }
            let z = b.to_z(pa)?;
            let jac = b.jacobian(pa)?;
            let m = metric_at_biaxial(pa, &b);
            // one diagonal and one off-diagonal pair per point
            let k = (pairs / 2) % 4;
            for (u, v) in [(k, k), (k, (k + 1) % 4)] {
                let tu = TangentVector::new(jac[u].to_vec());
                let tv = TangentVector::new(jac[v].to_vec());
                let pulled = g.on_vectors(&z, &tu, &tv);
                worst_rel = worst_rel.max((pulled - m[u][v]).abs() / (1.0 + m[u][v].abs()));
                pairs += 1;
            }
            if pairs >= 20 {
                break;
            }
        }
        ensure!(pairs >= 20, "only {pairs} tangent pairs away from the coordinate cuts");
        Ok((worst_rel, format!("{pairs} tangent pairs")))
    });
    c.finish()
}
