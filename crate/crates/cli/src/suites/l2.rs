use anyhow::Result;
use calabi_geometry::{calabi_metric, CalabiParams};
use forms_core::ChartPoint;
use l2_analysis::{
    coordinate_ball_volume, l2_integral_eh, l2_integral_general, l2_norm_form, CutoffOptions,
    FormKind,
};
use zero_modes::{classify_eh, classify_general, EhModeSpec, GeneralModeSpec, NormClass};

use super::Checks;
use crate::config::RunConfig;
use crate::report::CheckRecord;

/// EH specs whose quadrature tag disagrees with the analytic class,
/// over `ℓ ≤ ell_max`, `2N ≤ 6`.
pub fn eh_disagreements(ell_max: i64, kappa: f64) -> Result<(Vec<String>, usize)> {
    let mut bad = Vec::new();
    let mut total = 0;
    for ell in 0..=ell_max {
        for two_n in 0..=6u32 {
            for spec in EhModeSpec::multiplet(two_n, ell, kappa)? {
                let tag = l2_integral_eh(&spec, CutoffOptions::default())?.class();
                total += 1;
                if tag != classify_eh(two_n, ell)? {
                    bad.push(format!("2N={two_n} 2m={} l={ell}: {tag}", spec.two_m()));
                }
            }
        }
    }
    Ok((bad, total))
}

/// Same for the general family, one monomial per degree `δ ≤ 4`.
pub fn general_disagreements(n: usize, ell_max: i64, kappa: f64) -> Result<(Vec<String>, usize)> {
    let mut bad = Vec::new();
    let mut total = 0;
    for degree in 0..=4u32 {
        for ell in 0..=ell_max {
            let mut exps = vec![0; n + 1];
            exps[0] = degree;
            let spec = GeneralModeSpec::new(n, exps, ell, kappa)?;
            let tag = l2_integral_general(&spec, CutoffOptions::default())?.class();
            total += 1;
            if tag != classify_general(degree, ell, n)? {
                bad.push(format!("n={n} degree={degree} l={ell}: {tag}"));
            }
        }
    }
    Ok((bad, total))
}

fn summary(bad: &[String], total: usize) -> String {
    if bad.is_empty() {
        format!("{total} specs, zero disagreements")
    } else {
        format!("{total} specs; disagreements: {}", bad.join("; "))
    }
}

pub fn run(cfg: &RunConfig) -> Vec<CheckRecord> {
    let mut c = Checks::new(cfg);
    let (n, kappa, ell_max) = (cfg.n, cfg.kappa, cfg.ell_max);

    c.check("l2.classifier_eh", "quadrature tag = class from 2N < l", 0.5, || {
        let (bad, total) = eh_disagreements(ell_max, kappa)?;
        Ok((bad.len() as f64, summary(&bad, total)))
    });
    c.check("l2.classifier_general", "quadrature tag = class from degree < l", 0.5, || {
        let (bad, total) = general_disagreements(n, ell_max, kappa)?;
        Ok((bad.len() as f64, summary(&bad, total)))
    });
    c.check("l2.l2_form_norm", "integral of |omega-tilde|^2 = 4 pi^2 / kappa for n = 1", 1e-6, || {
        let v = l2_norm_form(FormKind::L2Form, 1, kappa, CutoffOptions::default())?;
        let want = 4.0 * std::f64::consts::PI.powi(2) / kappa;
        let got = v.value().ok_or_else(|| anyhow::anyhow!("reported {}", v.class()))?;
        Ok(((got - want).abs() / want, format!("value {got:.12}")))
    });
    c.check("l2.form_classes", "omega-tilde normalisable, beta log-divergent", 0.5, || {
        let tilde = l2_norm_form(FormKind::L2Form, n, kappa, CutoffOptions::default())?.class();
        let beta = l2_norm_form(FormKind::Beta, n, kappa, CutoffOptions::default())?.class();
        let wrong = (tilde != NormClass::Normalisable) as u8 + (beta != NormClass::LogDivergent) as u8;
        Ok((wrong as f64, format!("n = {n}: omega-tilde {tilde}, beta {beta}")))
    });
    c.check("l2.measure", "Monte Carlo volume of a coordinate ball = flat volume", 5e-3, || {
        let pa = CalabiParams::new(n, kappa)?;
        let parts: Vec<(f64, f64)> = (0..=n).map(|i| (0.8 - 0.2 * i as f64, 0.1 + 0.3 * i as f64)).collect();
        let center = ChartPoint::from_parts(&parts)?;
        let radius = 0.3;
        let samples = 40 * cfg.samples;
        let (vol, err) = coordinate_ball_volume(&calabi_metric(pa), &center, radius, samples, cfg.seed);
        let dim = n + 1;
        let factorial: f64 = (1..=dim).map(|k| k as f64).product();
        let flat = std::f64::consts::PI.powi(dim as i32) * radius.powi(2 * dim as i32) / factorial;
        Ok(((vol - flat).abs() / flat, format!("{samples} samples, estimate {vol:.6e} +- {err:.1e}, flat {flat:.6e}")))
    });
    c.finish()
}
