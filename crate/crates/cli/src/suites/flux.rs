use l2_analysis::{flux, flux_with_gauge, FluxTask};

use super::Checks;
use crate::config::RunConfig;
use crate::report::CheckRecord;

/// Gradient of `3 exp(−1/(1−ρ²))`, a bump of radius 0.8 around `(0.3, −0.2)`.
pub fn bump_gradient(x: f64, y: f64) -> (f64, f64) {
    let (dx, dy) = ((x - 0.3) / 0.8, (y + 0.2) / 0.8);
    let rho2 = dx * dx + dy * dy;
    if rho2 >= 1.0 {
        return (0.0, 0.0);
    }
    let phi = (-1.0 / (1.0 - rho2)).exp();
    let k = -phi / (1.0 - rho2).powi(2) * 2.0 / 0.8;
    (3.0 * k * dx, 3.0 * k * dy)
}

pub fn run(cfg: &RunConfig) -> Vec<CheckRecord> {
    let mut c = Checks::new(cfg);
    let (n, kappa) = (cfg.n, cfg.kappa);
    for ell in 1..=cfg.ell_max {
        c.check(&format!("flux.ell{ell}"), "(i/2pi) integral of F_A over the bolt = l", 1e-6, || {
            let r = flux(FluxTask::new(n, ell, kappa)?)?;
            Ok(((r.value - ell as f64).abs(), format!("n = {n}, kappa = {kappa}, flux {:.12}", r.value)))
        });
    }
    let ell = cfg.ell_max.max(1);
    c.check("flux.gauge", "flux unchanged by A -> A + i d(bump)", 1e-8, || {
        let task = FluxTask::new(n, ell, kappa)?;
        let plain = flux(task)?.value;
        let gauged = flux_with_gauge(task, Some(&bump_gradient))?.value;
        Ok(((plain - gauged).abs(), format!("l = {ell}")))
    });
    c.finish()
}
