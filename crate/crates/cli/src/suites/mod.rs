//! Verification suites. Each returns its records in a fixed order; numeric
//! errors become failing records instead of aborting the run.

pub mod calabi;
pub mod dirac;
pub mod eh;
pub mod flux;
pub mod l2;
pub mod quotient;

use anyhow::Result;
use forms_core::{par, ChartPoint, SampleDomain};

use crate::config::{RunConfig, Suite};
use crate::report::CheckRecord;

/// Record collector bound to a config (for tolerance overrides).
pub struct Checks<'a> {
    cfg: &'a RunConfig,
    records: Vec<CheckRecord>,
}

impl<'a> Checks<'a> {
    pub fn new(cfg: &'a RunConfig) -> Self {
        Self { cfg, records: Vec::new() }
    }

    /// Runs `f`, which yields the worst residual and a detail string.
    pub fn check(
        &mut self,
        id: &str,
        anchor: &str,
        default_tol: f64,
        f: impl FnOnce() -> Result<(f64, String)>,
    ) {
        let tol = self.cfg.tolerance(id, default_tol);
        let rec = match f() {
            Ok((r, d)) if r.is_finite() => CheckRecord::new(id, anchor, r, tol, d),
            Ok((r, d)) => CheckRecord::numeric_failure(id, anchor, tol, format!("residual {r}; {d}")),
            Err(e) => CheckRecord::numeric_failure(id, anchor, tol, format!("{e:#}")),
        };
        self.records.push(rec);
    }

    pub fn finish(self) -> Vec<CheckRecord> {
        self.records
    }
}

/// Largest value of a fallible per-item residual, NaN-propagating.
pub fn worst<T, F>(items: &[T], f: F) -> Result<f64>
where
    T: Sync,
    F: Fn(&T) -> Result<f64> + Sync + Send,
{
    par::map(items, f).into_iter().try_fold(0.0, |acc: f64, r| {
        let r = r?;
        Ok(if r.is_nan() || acc.is_nan() { f64::NAN } else { acc.max(r) })
    })
}

pub fn points(dim: usize, cfg: &RunConfig, stream: u64) -> Vec<ChartPoint> {
    SampleDomain::default().sample(dim, cfg.samples, cfg.seed.wrapping_mul(1000).wrapping_add(stream))
}

pub fn run_suite(suite: Suite, cfg: &RunConfig) -> Vec<CheckRecord> {
    match suite {
        Suite::Eh => eh::run(cfg),
        Suite::Calabi => calabi::run(cfg),
        Suite::Dirac => dirac::run(cfg),
        Suite::Quotient => quotient::run(cfg),
        Suite::L2 => l2::run(cfg),
        Suite::Flux => flux::run(cfg),
        Suite::All => Suite::ALL.iter().flat_map(|s| run_suite(*s, cfg)).collect(),
    }
}
