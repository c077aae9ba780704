use thiserror::Error;

/// Bad configuration; maps to the usage exit code.
#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("invalid value {value:?} for {key}")]
    Value { key: String, value: String },
    #[error("unknown config key {0:?}")]
    UnknownKey(String),
    #[error("config line {line}: expected key = value, got {text:?}")]
    Syntax { line: usize, text: String },
    #[error("invalid grid {0:?}: expected a,b,k with 0 < a < b and k >= 2")]
    Grid(String),
    #[error("unknown profile {0:?} (expected eh or calabi)")]
    Profile(String),
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("numeric: {0}")]
    Numeric(String),
}
