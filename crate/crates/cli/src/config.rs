use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::Serialize;

use crate::error::ConfigError;

/// Environment variable naming the default output directory.
pub const OUT_DIR_ENV: &str = "SPINC_OUT_DIR";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Eh,
    Calabi,
    Dirac,
    Quotient,
    L2,
    Flux,
    All,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Eh, Suite::Calabi, Suite::Dirac, Suite::Quotient, Suite::L2, Suite::Flux];

    /// The concrete suites this selection runs, in report order.
    pub fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => Self::ALL.to_vec(),
            s => vec![s],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Eh => "eh",
            Suite::Calabi => "calabi",
            Suite::Dirac => "dirac",
            Suite::Quotient => "quotient",
            Suite::L2 => "l2",
            Suite::Flux => "flux",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| ConfigError::Value { key: "suite".into(), value: s.into() })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(ConfigError::Value { key: "format".into(), value: s.into() }),
        }
    }
}

/// Everything a verification run depends on. Tolerances override the
/// per-check defaults by check id.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunConfig {
    pub suite: Suite,
    pub n: usize,
    pub kappa: f64,
    pub ell_max: i64,
    pub seed: u64,
    pub samples: usize,
    pub tolerances: BTreeMap<String, f64>,
    pub output: Option<PathBuf>,
    pub format: Format,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            suite: Suite::All,
            n: 2,
            kappa: 1.0,
            ell_max: 3,
            seed: 7,
            samples: 100,
            tolerances: BTreeMap::new(),
            output: None,
            format: Format::Json,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        let bad = |key: &str, value: String| Err(ConfigError::Value { key: key.into(), value });
        if !(1..=calabi_geometry::MAX_N).contains(&self.n) {
            return bad("n", self.n.to_string());
        }
        if !(self.kappa > 0.0 && self.kappa.is_finite()) {
            return bad("kappa", self.kappa.to_string());
        }
        if !(0..=8).contains(&self.ell_max) {
            return bad("ell-max", self.ell_max.to_string());
        }
        if self.samples == 0 {
            return bad("samples", "0".into());
        }
        for (k, v) in &self.tolerances {
            if !(*v > 0.0 && v.is_finite()) {
                return bad(&format!("tol.{k}"), v.to_string());
            }
        }
        Ok(())
    }

    /// Applies one `key = value` setting; keys match the command-line flags.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), ConfigError> {
        let err = || ConfigError::Value { key: key.into(), value: value.into() };
        match key {
            "suite" => self.suite = value.parse()?,
            "n" => self.n = value.parse().map_err(|_| err())?,
            "kappa" => self.kappa = value.parse().map_err(|_| err())?,
            "ell-max" | "ell_max" => self.ell_max = value.parse().map_err(|_| err())?,
            "seed" => self.seed = value.parse().map_err(|_| err())?,
            "samples" => self.samples = value.parse().map_err(|_| err())?,
            "out" | "output" => self.output = Some(PathBuf::from(value)),
            "format" => self.format = value.parse()?,
            _ => match key.strip_prefix("tol.") {
                Some(id) if !id.is_empty() => {
                    self.tolerances.insert(id.into(), value.parse().map_err(|_| err())?);
                }
                _ => return Err(ConfigError::UnknownKey(key.into())),
            },
        }
        Ok(())
    }

    /// Overrides from the flat config format: one `key = value` per line,
    /// `#` starts a comment, blank lines are ignored.
    pub fn apply_file(&mut self, text: &str) -> Result<(), ConfigError> {
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| ConfigError::Syntax { line: i + 1, text: raw.into() })?;
            self.set(k.trim(), v.trim())?;
        }
        Ok(())
    }

    /// Per-check tolerance: explicit override or the given default.
    pub fn tolerance(&self, check_id: &str, default: f64) -> f64 {
        self.tolerances.get(check_id).copied().unwrap_or(default)
    }
}
