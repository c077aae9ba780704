use anyhow::{anyhow, Result};
use calabi_geometry::{beta_mode, calabi_metric, CalabiParams};
use eh_geometry::{eh_metric, EhParams};
use forms_core::{dirac, norm_sq_at, ChartPoint, Complex64, FormField, HermitianMetricField, ScalarField};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zero_modes::{
    classify_eh, count_eh, eh_norm_sq, eh_zero_mode, max_residual, residual_at, EhModeSpec,
    GeneralModeSpec, ZeroModeSpec,
};

use super::{points, worst, Checks};
use crate::config::RunConfig;
use crate::report::CheckRecord;

/// `Λ⁰` and `Λ^{0,2}` parts of `D(β dz̄₁ + γ dz̄₂)` on a unit-determinant
/// Kähler surface, expanded by hand.
fn d_minus_explicit(g: &HermitianMetricField, beta: &ScalarField, gamma: &ScalarField) -> Result<FormField> {
    let scalar = g.g(1, 1) * beta.d_z(0) - g.g(1, 0) * gamma.d_z(0) - g.g(0, 1) * beta.d_z(1)
        + g.g(0, 0) * gamma.d_z(1);
    let top = gamma.d_zbar(0) - beta.d_zbar(1);
    Ok(FormField::scalar(2, scalar).add(&FormField::monomial(2, &[], &[0, 1], top))?)
}

/// `D(α + δ dz̄₁∧dz̄₂)`, expanded by hand.
fn d_plus_explicit(g: &HermitianMetricField, alpha: &ScalarField, delta: &ScalarField) -> FormField {
    let c1 = alpha.d_zbar(0) - g.g(0, 0) * delta.d_z(1) + g.g(1, 0) * delta.d_z(0);
    let c2 = alpha.d_zbar(1) - g.g(0, 1) * delta.d_z(1) + g.g(1, 1) * delta.d_z(0);
    FormField::from_antiholomorphic(vec![c1, c2])
}

/// Smooth non-polynomial spinor coefficient drawn from `rng`.
fn random_coefficient(rng: &mut ChaCha8Rng) -> ScalarField {
    fn rc(rng: &mut ChaCha8Rng) -> Complex64 {
        Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
    }
    let mut acc = ScalarField::zero();
    for _ in 0..3 {
        let mut term = ScalarField::constant(rc(rng));
        for mu in 0..2 {
            term = term * ScalarField::z(mu).powi(rng.random_range(0..3));
            term = term * ScalarField::zbar(mu).powi(rng.random_range(0..3));
        }
        acc = acc + term;
    }
    let wobble = (ScalarField::constant(rc(rng) * 0.3) * ScalarField::z(0) * ScalarField::zbar(1)).exp();
    acc * wobble / ScalarField::s(2)
}

/// Engine pairing `|σ|²` at `(1, 0)` for `(N, m, ℓ, κ) = (0, 0, 1, 3)`.
pub fn spot_value() -> Result<f64> {
    let spec = EhModeSpec::new(0, 0, 1, 3.0)?;
    let at = ChartPoint::from_parts(&[(1.0, 0.0), (0.0, 0.0)])?;
    Ok(norm_sq_at(&eh_zero_mode(&spec), &eh_metric(spec.params()), &at)?)
}

/// Value of [`spot_value`] derived by hand: `F = 2`, `f = 2 + √3`,
/// `|σ|² = 1/(F s³ f)`.
pub fn spot_value_derived() -> f64 {
    1.0 / (2.0 * (2.0 + 3f64.sqrt()))
}

/// EH modes with `2N ≤ ℓ + 1` for one `ℓ`.
pub fn eh_modes(ell: i64, kappa: f64) -> Result<Vec<EhModeSpec>> {
    let mut out = Vec::new();
    for two_n in 0..=(ell + 1) as u32 {
        out.extend(EhModeSpec::multiplet(two_n, ell, kappa)?);
    }
    Ok(out)
}

/// Worst zero-mode residual over `specs`.
pub fn worst_mode_residual(specs: &[ZeroModeSpec], pts: &[ChartPoint]) -> Result<f64> {
    specs.iter().try_fold(0.0f64, |acc, s| Ok(acc.max(max_residual(s, pts)?.total)))
}

/// `β` residual under the untwisted operator for one `n`.
pub fn beta_residual(n: usize, kappa: f64, pts: &[ChartPoint]) -> Result<f64> {
    let pa = CalabiParams::new(n, kappa)?;
    let (beta, g) = (beta_mode(pa), calabi_metric(pa));
    let d = dirac(&beta, &g)?;
    worst(pts, |p| Ok(residual_at(&d, &beta, &g, p)?.total))
}

pub fn general_specs(n: usize, max_degree: u32, ell_max: i64, kappa: f64) -> Result<Vec<ZeroModeSpec>> {
    let mut out = Vec::new();
    for ell in 0..=ell_max {
        for degree in 0..=max_degree {
            out.extend(GeneralModeSpec::all_of_degree(n, degree, ell, kappa)?.into_iter().map(ZeroModeSpec::General));
        }
    }
    Ok(out)
}

/// Engine-vs-explicit comparison on `count` random spinors at the sample points.
pub fn recipe_residuals(kappa: f64, pts: &[ChartPoint], seed: u64) -> Result<(f64, f64)> {
    let g = eh_metric(EhParams::new(kappa)?);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let spinors: Vec<[ScalarField; 4]> =
        pts.iter().map(|_| std::array::from_fn(|_| random_coefficient(&mut rng))).collect();
    let items: Vec<(&ChartPoint, &[ScalarField; 4])> = pts.iter().zip(&spinors).collect();
    let pairs = forms_core::par::map(&items, |(p, [alpha, beta, gamma, delta])| -> Result<(f64, f64)> {
        let minus = FormField::from_antiholomorphic(vec![beta.clone(), gamma.clone()]);
        let explicit = d_minus_explicit(&g, beta, gamma)?;
        let rm = dirac(&minus, &g)?.max_diff_at(&explicit, p) / (1.0 + explicit.max_abs_at(p));
        let plus = FormField::scalar(2, alpha.clone())
            .add(&FormField::monomial(2, &[], &[0, 1], delta.clone()))?;
        let explicit = d_plus_explicit(&g, alpha, delta);
        let rp = dirac(&plus, &g)?.max_diff_at(&explicit, p) / (1.0 + explicit.max_abs_at(p));
        Ok((rm, rp))
    });
    pairs.into_iter().try_fold((0.0f64, 0.0f64), |(a, b), r| {
        let (x, y) = r?;
        Ok((a.max(x), b.max(y)))
    })
}

pub fn run(cfg: &RunConfig) -> Vec<CheckRecord> {
    let mut c = Checks::new(cfg);
    let (kappa, n, ell_max) = (cfg.kappa, cfg.n, cfg.ell_max);
    let pts = points(2, cfg, 3);

    let recipe = recipe_residuals(kappa, &pts, cfg.seed);
    let split = |r: &Result<(f64, f64)>, pick: fn((f64, f64)) -> f64| -> Result<f64> {
        r.as_ref().map(|x| pick(*x)).map_err(|e| anyhow!("{e:#}"))
    };
    c.check("dirac.recipe_minus", "generic recipe = explicit D on Lambda^{0,1}", 1e-10, || {
        Ok((split(&recipe, |x| x.0)?, format!("{} random spinors", pts.len())))
    });
    c.check("dirac.recipe_plus", "generic recipe = explicit D on Lambda^{0,0} + Lambda^{0,2}", 1e-10, || {
        Ok((split(&recipe, |x| x.1)?, format!("{} random spinors", pts.len())))
    });
    c.check("dirac.kahler_cancellation", "d_1 g_{2 1bar} = d_2 g_{1 1bar}, d_1 g_{2 2bar} = d_2 g_{1 2bar}", 1e-8, || {
        let g = eh_metric(EhParams::new(kappa)?);
        let first = g.g(1, 0).d_z(0) - g.g(0, 0).d_z(1);
        let second = g.g(1, 1).d_z(0) - g.g(0, 1).d_z(1);
        let r = worst(&pts, |p| Ok(first.eval(p).norm().max(second.eval(p).norm())))?;
        Ok((r, format!("{} points", pts.len())))
    });

    for ell in 0..=ell_max {
        let id = format!("dirac.eh_modes.ell{ell}");
        c.check(&id, "|D_A sigma| / |sigma| = 0 for every (N, m) with 2N <= l + 1", 1e-8, || {
            let specs = eh_modes(ell, kappa)?;
            let normalisable = specs
                .iter()
                .map(|s| classify_eh(s.two_n(), ell))
                .collect::<Result<Vec<_>, _>>()?
                .into_iter()
                .filter(|k| k.is_finite())
                .count();
            let wrapped: Vec<ZeroModeSpec> = specs.into_iter().map(ZeroModeSpec::Eh).collect();
            let r = worst_mode_residual(&wrapped, &pts)?;
            Ok((r, format!("{} modes, {normalisable} normalisable", wrapped.len())))
        });
    }
    c.check("dirac.count", "normalisable EH modes per l = l(l+1)/2", 0.5, || {
        let mut off: f64 = 0.0;
        let mut counts = Vec::new();
        for ell in 1..=ell_max.max(1) {
            let got = count_eh(ell)?;
            let by_class = eh_modes(ell, kappa)?
                .iter()
                .filter(|s| classify_eh(s.two_n(), ell).map(|k| k.is_finite()).unwrap_or(false))
                .count();
            let want = (ell * (ell + 1) / 2) as usize;
            off = off.max(got.abs_diff(want).max(by_class.abs_diff(want)) as f64);
            counts.push(format!("l={ell}: {got}"));
        }
        Ok((off, counts.join(", ")))
    });
    c.check("dirac.general_modes", "|D_A sigma| / |sigma| = 0 for degree <= 2, l <= 2", 1e-8, || {
        let pts_n = points(n + 1, cfg, 4);
        let specs = general_specs(n, 2, ell_max.min(2), kappa)?;
        let r = worst_mode_residual(&specs, &pts_n)?;
        Ok((r, format!("n = {n}, {} modes", specs.len())))
    });
    let mut beta_ns = vec![1, 2, 3, n];
    beta_ns.sort_unstable();
    beta_ns.dedup();
    c.check("dirac.beta_mode", "D beta = 0", 1e-9, || {
        let r = beta_ns.iter().try_fold(0.0f64, |acc, &m| -> Result<f64> {
            Ok(acc.max(beta_residual(m, kappa, &points(m + 1, cfg, 5))?))
        })?;
        Ok((r, format!("n in {beta_ns:?}")))
    });
    c.check("dirac.norm_formula", "|sigma|^2 = |z1|^2a |z2|^2b / (F s^(4N+3) f^l)", 1e-10, || {
        let g = eh_metric(EhParams::new(kappa)?);
        let mut r: f64 = 0.0;
        for ell in 0..=ell_max {
            for spec in eh_modes(ell, kappa)? {
                let (sigma, closed) = (eh_zero_mode(&spec), eh_norm_sq(&spec));
                r = r.max(worst(&pts, |p| {
                    let want = closed.eval(p).re;
                    Ok((norm_sq_at(&sigma, &g, p)? - want).abs() / want)
                })?);
            }
        }
        Ok((r, "relative".into()))
    });
    c.check("dirac.spot_value", "|sigma|^2 at (1,0) for (N,m,l,kappa) = (0,0,1,3) is 1/(2(2+sqrt3))", 1e-12, || {
        let v = spot_value()?;
        Ok(((v - spot_value_derived()).abs(), format!("engine value {v:.17}")))
    });
    c.finish()
}
