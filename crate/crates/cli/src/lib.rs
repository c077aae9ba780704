//! Batch verification front end. [`run`] executes the selected suites and
//! returns an ordered [`Report`]; [`dump_profiles`] writes radial profile
//! tables for plotting. The `spinc` binary wraps both.

pub mod config;
pub mod error;
pub mod profiles;
pub mod report;
pub mod suites;

pub use config::{Format, RunConfig, Suite, OUT_DIR_ENV};
pub use error::{CliError, ConfigError};
pub use profiles::{dump_profiles, Grid, Profile};
pub use report::{CheckRecord, Report, Status, Summary};

/// Runs every suite in `config.suite`. Suites execute concurrently; the
/// records are assembled in suite order, so the report is deterministic.
pub fn run(config: &RunConfig) -> Result<Report, ConfigError> {
    config.validate()?;
    let suites = config.suite.expand();
    let per_suite = forms_core::par::map(&suites, |s| suites::run_suite(*s, config));
    Ok(Report::new(config.clone(), per_suite.into_iter().flatten().collect()))
}
