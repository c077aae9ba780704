use std::io::Write;

use serde::Serialize;

use crate::error::L2Error;
use crate::radial::L2Value;

/// One result line: what was integrated, its tag and the value when finite.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct L2Row {
    pub label: String,
    pub tag: String,
    pub value: Option<f64>,
    pub error_estimate: Option<f64>,
}

impl L2Row {
    pub fn new(label: impl Into<String>, v: &L2Value) -> Self {
        let (value, error_estimate) = match *v {
            L2Value::Finite { value, error } => (Some(value), Some(error)),
            L2Value::Divergent { .. } => (None, None),
        };
        Self { label: label.into(), tag: v.class().to_string(), value, error_estimate }
    }
}

pub fn write_results_csv<W: Write>(rows: &[L2Row], out: W) -> Result<(), L2Error> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["spec", "tag", "value", "error_estimate"])?;
    let fmt = |x: Option<f64>| x.map_or("NaN".to_string(), |v| format!("{v:.12e}"));
    for r in rows {
        w.write_record([r.label.clone(), r.tag.clone(), fmt(r.value), fmt(r.error_estimate)])?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn write_results_json<W: Write>(rows: &[L2Row], out: W) -> Result<(), L2Error> {
    serde_json::to_writer_pretty(out, rows)?;
    Ok(())
}
