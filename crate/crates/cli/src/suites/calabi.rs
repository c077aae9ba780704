use calabi_geometry::{
    beta_mode, beta_norm_sq, calabi_metric, kahler_form_general, killing_identity_residual, l2_form_closed_form,
    l2_form_general, trace_inverse, CalabiParams,
};
use forms_core::{exterior_derivative, linalg, norm_sq_at, ChartPoint, Complex64};

use super::{points, worst, Checks};
use crate::config::RunConfig;
use crate::report::CheckRecord;

/// Metric certification for one `n`; shared with the acceptance sweep.
pub fn metric_checks(c: &mut Checks<'_>, n: usize, kappa: f64, pts: &[ChartPoint]) {
    let dim = n + 1;
    c.check(&format!("calabi.n{n}.det_unit"), "det g = 1", 1e-10, || {
        let g = calabi_metric(CalabiParams::new(n, kappa)?);
        let r = worst(pts, |p| Ok((linalg::det(dim, &g.matrix_at(p)) - Complex64::new(1.0, 0.0)).norm()))?;
        Ok((r, format!("{} points, n = {n}, kappa = {kappa}", pts.len())))
    });
    c.check(&format!("calabi.n{n}.inverse"), "closed-form inverse = numeric inverse", 1e-10, || {
        let g = calabi_metric(CalabiParams::new(n, kappa)?);
        let r = worst(pts, |p| {
            Ok(linalg::max_abs_diff(&linalg::inverse(dim, &g.matrix_at(p))?, &g.inverse_at(p)))
        })?;
        Ok((r, format!("{} points", pts.len())))
    });
}

pub fn run(cfg: &RunConfig) -> Vec<CheckRecord> {
    let mut c = Checks::new(cfg);
    let (n, kappa) = (cfg.n, cfg.kappa);
    let pts = points(n + 1, cfg, 2);
    metric_checks(&mut c, n, kappa, &pts);

    c.check("calabi.trace_inverse", "Tr g^-1 = n/F + F^n", 1e-10, || {
        let pa = CalabiParams::new(n, kappa)?;
        let g = calabi_metric(pa);
        let r = worst(&pts, |p| {
            let inv = g.inverse_at(p);
            let trace: f64 = (0..=n).map(|i| inv[i * (n + 1) + i].re).sum();
            Ok((trace - trace_inverse(pa, p.s())).abs() / trace)
        })?;
        Ok((r, "relative".into()))
    });
    c.check("calabi.l2_form_closed", "d omega-tilde = 0", 1e-8, || {
        let pa = CalabiParams::new(n, kappa)?;
        let tilde = l2_form_general(pa);
        let d = exterior_derivative(&tilde);
        let r = worst(&pts, |p| Ok(d.max_abs_at(p) / tilde.max_abs_at(p).max(1.0)))?;
        Ok((r, format!("{} points", pts.len())))
    });
    c.check("calabi.l2_form_closed_form", "omega-tilde = 2i(chi' zbar z + chi delta)", 1e-10, || {
        let pa = CalabiParams::new(n, kappa)?;
        let (tilde, closed) = (l2_form_general(pa), l2_form_closed_form(pa));
        let r = worst(&pts, |p| Ok(tilde.max_diff_at(&closed, p) / closed.max_abs_at(p).max(1.0)))?;
        Ok((r, "relative".into()))
    });
    c.check("calabi.killing_identity", "omega - kappa omega-tilde = 2i d(z.dzbar / F^n)", 1e-9, || {
        let pa = CalabiParams::new(n, kappa)?;
        let omega = kahler_form_general(pa);
        let r = worst(&pts, |p| Ok(killing_identity_residual(pa, p)? / omega.max_abs_at(p)))?;
        Ok((r, "relative to |omega|".into()))
    });
    c.check("calabi.beta_norm", "|beta|^2 = 1/(s^(2n+1) F^n)", 1e-10, || {
        let pa = CalabiParams::new(n, kappa)?;
        let (beta, g) = (beta_mode(pa), calabi_metric(pa));
        let r = worst(&pts, |p| {
            let want = beta_norm_sq(pa, p.s())?;
            Ok((norm_sq_at(&beta, &g, p)? - want).abs() / want)
        })?;
        Ok((r, "relative".into()))
    });
    c.finish()
}
