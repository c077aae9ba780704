use forms_core::quad::{integrate, QuadOptions};
use serde::Serialize;
use zero_modes::NormClass;

use crate::error::L2Error;

/// Large-`s` behaviour of a radial integrand.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum Decay {
    /// `~ s^{−q}`.
    Power(f64),
    Exponential,
}

/// A positive integrand in `s` (measure included) with declared asymptotics:
/// `~ s^{small_s_exponent}` near 0.
pub struct RadialIntegrand<'a> {
    profile: Box<dyn Fn(f64) -> f64 + Send + Sync + 'a>,
    pub small_s_exponent: f64,
    pub large_s: Decay,
}

impl<'a> RadialIntegrand<'a> {
    pub fn new(
        profile: impl Fn(f64) -> f64 + Send + Sync + 'a,
        small_s_exponent: f64,
        large_s: Decay,
    ) -> Self {
        Self { profile: Box::new(profile), small_s_exponent, large_s }
    }

    pub fn eval(&self, s: f64) -> f64 {
        (self.profile)(s)
    }

    /// Log-log slopes between `a` and `10a`, at the small end and at the large end.
    pub fn numeric_slopes(&self, small: f64, large: f64) -> (f64, f64) {
        let slope = |a: f64| (self.eval(10.0 * a) / self.eval(a)).log10();
        (slope(small), slope(large))
    }
}

/// Inner cutoffs `10^{−k}` for `k` in `1..=max_k`, outer cutoff and tolerances.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CutoffOptions {
    pub max_k: u32,
    pub s_max: f64,
    pub quad: QuadOptions,
    /// Fitted increment exponents above this are divergent, below `-threshold` finite.
    pub slope_threshold: f64,
}

impl Default for CutoffOptions {
    fn default() -> Self {
        Self {
            max_k: 6,
            s_max: 1e4,
            quad: QuadOptions { abs_tol: 1e-9, rel_tol: 1e-8, max_intervals: 4000 },
            slope_threshold: 0.5,
        }
    }
}

/// Finite value with error estimate, or the detected divergence and the
/// fitted power `p` in `ΔI_k ∝ ε_k^{−p}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "tag")]
pub enum L2Value {
    Finite { value: f64, error: f64 },
    Divergent { class: NormClassTag, fitted_power: f64 },
}

/// Serialisable mirror of [`NormClass`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NormClassTag(#[serde(serialize_with = "ser_class")] pub NormClass);

fn ser_class<S: serde::Serializer>(c: &NormClass, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&c.to_string())
}

impl L2Value {
    pub fn class(&self) -> NormClass {
        match self {
            L2Value::Finite { .. } => NormClass::Normalisable,
            L2Value::Divergent { class, .. } => class.0,
        }
    }

    pub fn value(&self) -> Option<f64> {
        match *self {
            L2Value::Finite { value, .. } => Some(value),
            L2Value::Divergent { .. } => None,
        }
    }

    pub fn scaled(self, c: f64) -> Self {
        match self {
            L2Value::Finite { value, error } => L2Value::Finite { value: value * c, error: error * c },
            d => d,
        }
    }
}

/// `∫_a^b g(s) ds` in the variable `t = ln s`.
fn integrate_log(
    g: &RadialIntegrand<'_>,
    a: f64,
    b: f64,
    quad: QuadOptions,
) -> Result<(f64, f64), L2Error> {
    let r = integrate(|t| {
        let s = t.exp();
        g.eval(s) * s
    }, a.ln(), b.ln(), quad)
    .map_err(|source| L2Error::Quadrature { a, b, source })?;
    Ok((r.value, r.error))
}

/// Least-squares slope of `y` against `0, 1, 2, …`.
fn slope(y: &[f64]) -> f64 {
    let n = y.len() as f64;
    let xm = (n - 1.0) / 2.0;
    let ym = y.iter().sum::<f64>() / n;
    let (mut num, mut den) = (0.0, 0.0);
    for (i, v) in y.iter().enumerate() {
        num += (i as f64 - xm) * (v - ym);
        den += (i as f64 - xm).powi(2);
    }
    num / den
}

/// Integrates over `(0, ∞)`: the bulk on `[0.1, s_max]`, an analytic power
/// tail, and shells `[10^{−k−1}, 10^{−k}]` whose growth decides convergence
/// at the origin.
pub fn integrate_radial(g: &RadialIntegrand<'_>, opts: CutoffOptions) -> Result<L2Value, L2Error> {
    let tail = match g.large_s {
        Decay::Power(q) if q <= 1.0 => {
            return Ok(L2Value::Divergent {
                class: NormClassTag(NormClass::DivergentAtInfinity),
                fitted_power: 1.0 - q,
            })
        }
        Decay::Power(q) => g.eval(opts.s_max) * opts.s_max / (q - 1.0),
        Decay::Exponential => 0.0,
    };
    let (bulk, mut error) = integrate_log(g, 0.1, opts.s_max, opts.quad)?;
    error += tail.abs() * 1e-3;
    let mut shells = Vec::with_capacity(opts.max_k as usize);
    for k in 1..opts.max_k {
        let hi = 10f64.powi(-(k as i32));
        let (v, e) = integrate_log(g, hi / 10.0, hi, opts.quad)?;
        shells.push(v);
        error += e;
    }
    let logs: Vec<f64> = shells.iter().map(|v| v.max(f64::MIN_POSITIVE).log10()).collect();
    let window = &logs[logs.len().saturating_sub(4)..];
    let power = slope(window);
    if power > opts.slope_threshold {
        return Ok(L2Value::Divergent {
            class: NormClassTag(NormClass::PowerDivergentAtZero),
            fitted_power: power,
        });
    }
    if power >= -opts.slope_threshold {
        return Ok(L2Value::Divergent {
            class: NormClassTag(NormClass::LogDivergent),
            fitted_power: power,
        });
    }
    // remaining shells continue geometrically with ratio 10^{power}
    let ratio = 10f64.powf(power);
    let last = *shells.last().unwrap_or(&0.0);
    let remainder = last * ratio / (1.0 - ratio);
    Ok(L2Value::Finite {
        value: bulk + tail + shells.iter().sum::<f64>() + remainder,
        error: error + remainder.abs() * 1e-2,
    })
}
