use anyhow::Result;
use forms_core::{sample_unitaries, Complex64, SampleDomain};
use hk_quotient::{
    embed, extracted_potential, moment_maps, pullback_check, quotient_potential, u2_equivariance,
    FdScheme, LevelSetCoords, LevelTangent,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{worst, Checks};
use crate::config::RunConfig;
use crate::report::CheckRecord;

pub fn level_points(count: usize, kappa: f64, seed: u64) -> Result<Vec<LevelSetCoords>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    SampleDomain::default()
        .sample(2, count, seed)
        .into_iter()
        .map(|p| {
            let psi = rng.random_range(0.0..std::f64::consts::TAU);
            Ok(LevelSetCoords::new([p.coord(0), p.coord(1)], psi, kappa)?)
        })
        .collect()
}

pub fn level_tangents(count: usize, seed: u64) -> Vec<LevelTangent> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = || rng.random_range(-1.0..1.0);
    (0..count)
        .map(|_| LevelTangent {
            dz: [Complex64::new(g(), g()), Complex64::new(g(), g())],
            dpsi: g(),
        })
        .collect()
}

fn special_unitary(u: &[Complex64]) -> [Complex64; 4] {
    let r = (u[0] * u[3] - u[1] * u[2]).sqrt();
    [u[0] / r, u[1] / r, u[2] / r, u[3] / r]
}

pub fn run(cfg: &RunConfig) -> Vec<CheckRecord> {
    let mut c = Checks::new(cfg);
    let kappa = cfg.kappa;
    let seed = cfg.seed.wrapping_mul(1000).wrapping_add(6);
    let coords = level_points(cfg.samples, kappa, seed);

    c.check("quotient.moment_residual", "mu_R = mu_C = 0 on embedded points", 1e-12, || {
        let pts = coords.as_ref().map_err(|e| anyhow::anyhow!("{e:#}"))?;
        let r = worst(pts, |lc| Ok(moment_maps(&embed(lc)?, kappa).residual()))?;
        Ok((r, format!("{} points", pts.len())))
    });
    c.check("quotient.completed_square", "(|dZ|^2 + |dW|^2)/2 = g_EH + sF (dpsi - 2 Im A)^2", 1e-6, || {
        let pts = coords.as_ref().map_err(|e| anyhow::anyhow!("{e:#}"))?;
        let ts = level_tangents(pts.len(), seed + 1);
        let items: Vec<_> = pts.iter().zip(&ts).collect();
        let r = worst(&items, |(lc, v)| {
            Ok(pullback_check(lc, std::slice::from_ref(*v), FdScheme::default())?.max_rel_error)
        })?;
        Ok((r, format!("{} tangent evaluations, relative", items.len())))
    });
    c.check("quotient.extracted_potential", "A read off the pullback = sqrt(kappa) z.dzbar / (2 s^2 F)", 1e-10, || {
        let pts = coords.as_ref().map_err(|e| anyhow::anyhow!("{e:#}"))?;
        let scheme = FdScheme::Central4 { step: 1e-3 };
        let r = worst(pts, |lc| {
            let (got, want) = (extracted_potential(lc, scheme)?, quotient_potential(lc)?);
            Ok((0..2).map(|i| (got[i] - want[i]).norm()).fold(0.0, f64::max))
        })?;
        Ok((r, "componentwise, 4th-order stencil".into()))
    });
    c.check("quotient.su2_equivariance", "embed(h z) = h embed(z) up to a right U(1) phase", 1e-12, || {
        let pts = coords.as_ref().map_err(|e| anyhow::anyhow!("{e:#}"))?;
        let us = sample_unitaries(2, pts.len(), seed + 2);
        let items: Vec<_> = pts.iter().zip(&us).collect();
        let r = worst(&items, |(lc, u)| {
            let chk = u2_equivariance(&special_unitary(u), lc)?;
            Ok(chk.alignment.max(chk.moment_after))
        })?;
        Ok((r, format!("{} SU(2) elements", items.len())))
    });
    c.finish()
}
