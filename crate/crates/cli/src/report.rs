use std::fmt::Display;
use std::fs;
use std::io::Write;
use std::path::Path;

use serde::Serialize;

use crate::config::{Format, RunConfig};
use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One verified identity. `status` is pass iff `max_residual < tolerance`;
/// a numeric error yields a non-finite residual and therefore a fail.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub check_id: String,
    /// The identity being checked, written out.
    pub anchor: String,
    pub status: Status,
    pub max_residual: f64,
    pub tolerance: f64,
    pub details: String,
    pub numeric_error: bool,
}

impl CheckRecord {
    pub fn new(
        check_id: impl Into<String>,
        anchor: impl Into<String>,
        max_residual: f64,
        tolerance: f64,
        details: impl Into<String>,
    ) -> Self {
        let status = if max_residual < tolerance { Status::Pass } else { Status::Fail };
        Self {
            check_id: check_id.into(),
            anchor: anchor.into(),
            status,
            max_residual,
            tolerance,
            details: details.into(),
            numeric_error: false,
        }
    }

    pub fn numeric_failure(
        check_id: impl Into<String>,
        anchor: impl Into<String>,
        tolerance: f64,
        err: impl Display,
    ) -> Self {
        Self {
            check_id: check_id.into(),
            anchor: anchor.into(),
            status: Status::Fail,
            max_residual: f64::NAN,
            tolerance,
            details: format!("numeric error: {err}"),
            numeric_error: true,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub numeric_errors: usize,
}

/// Ordered check records plus the configuration that produced them.
///
/// `generated_at` is the only field that varies between identical runs; it
/// is left `None` by [`crate::run`] and stamped by the binary.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub version: String,
    pub config: RunConfig,
    pub summary: Summary,
    pub checks: Vec<CheckRecord>,
    pub generated_at: Option<u64>,
}

impl Report {
    pub fn new(config: RunConfig, checks: Vec<CheckRecord>) -> Self {
        let passed = checks.iter().filter(|c| c.passed()).count();
        let summary = Summary {
            total: checks.len(),
            passed,
            failed: checks.len() - passed,
            numeric_errors: checks.iter().filter(|c| c.numeric_error).count(),
        };
        Self { version: env!("CARGO_PKG_VERSION").into(), config, summary, checks, generated_at: None }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn check(&self, id: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.check_id == id)
    }

    pub fn write_json<W: Write>(&self, mut out: W) -> Result<(), CliError> {
        serde_json::to_writer_pretty(&mut out, self)?;
        out.write_all(b"\n")?;
        Ok(())
    }

    /// One row per check; the config echo and summary are omitted.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<(), CliError> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["check_id", "anchor", "status", "max_residual", "tolerance", "details"])?;
        for c in &self.checks {
            let status = if c.passed() { "pass" } else { "fail" };
            w.write_record([
                c.check_id.as_str(),
                c.anchor.as_str(),
                status,
                &format!("{:e}", c.max_residual),
                &format!("{:e}", c.tolerance),
                c.details.as_str(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn write<W: Write>(&self, format: Format, out: W) -> Result<(), CliError> {
        match format {
            Format::Json => self.write_json(out),
            Format::Csv => self.write_csv(out),
        }
    }

    /// Writes to a sibling temporary file and renames it into place.
    pub fn write_atomic(&self, format: Format, path: &Path) -> Result<(), CliError> {
        let mut buf = Vec::new();
        self.write(format, &mut buf)?;
        let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
        fs::create_dir_all(dir)?;
        let name = path.file_name().and_then(|n| n.to_str()).unwrap_or("report");
        let tmp = dir.join(format!(".{name}.{}.tmp", std::process::id()));
        fs::write(&tmp, &buf)?;
        fs::rename(&tmp, path).inspect_err(|_| {
            let _ = fs::remove_file(&tmp);
        })?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_follows_tolerance() {
        assert!(CheckRecord::new("a", "x", 1e-11, 1e-10, "").passed());
        assert!(!CheckRecord::new("a", "x", 1e-10, 1e-10, "").passed());
        assert!(!CheckRecord::new("a", "x", f64::NAN, 1e-10, "").passed());
        let r = Report::new(
            RunConfig::default(),
            vec![CheckRecord::new("a", "x", 0.0, 1.0, ""), CheckRecord::numeric_failure("b", "y", 1.0, "boom")],
        );
        assert_eq!(r.summary, Summary { total: 2, passed: 1, failed: 1, numeric_errors: 1 });
        let mut buf = Vec::new();
        r.write_json(&mut buf).unwrap();
        let v: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        assert!(v["checks"][1]["max_residual"].is_null());
        assert_eq!(v["config"]["suite"], "all");
    }
}
