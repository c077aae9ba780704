use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use calabi_geometry::CalabiParams;
use eh_geometry::{eh_metric, l2_form, EhParams};
use forms_core::{norm_sq_at, ChartPoint};
use zero_modes::{eh_zero_mode, EhModeSpec};

use crate::error::{CliError, ConfigError};

/// `k` evenly spaced values on `[a, b]`, parsed from `a,b,k`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Grid {
    pub a: f64,
    pub b: f64,
    pub k: usize,
}

impl Grid {
    pub fn values(&self) -> Vec<f64> {
        let step = (self.b - self.a) / (self.k - 1) as f64;
        (0..self.k).map(|i| if i + 1 == self.k { self.b } else { self.a + step * i as f64 }).collect()
    }
}

impl FromStr for Grid {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ConfigError::Grid(s.into());
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let [a, b, k] = parts.as_slice() else { return Err(bad()) };
        let (a, b): (f64, f64) = (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?);
        let k: usize = k.parse().map_err(|_| bad())?;
        if !(a > 0.0 && b > a && b.is_finite() && k >= 2) {
            return Err(bad());
        }
        Ok(Grid { a, b, k })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Profile {
    /// `s, F, f, 1/f, f·(1/f), |ω̃|², |σ|²` with `σ` the `(0,0,1,κ)` mode.
    Eh,
    /// `s, F, |ω̃|², |β|²` for the chosen `n`.
    Calabi,
}

impl FromStr for Profile {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "eh" => Ok(Profile::Eh),
            "calabi" => Ok(Profile::Calabi),
            _ => Err(ConfigError::Profile(s.into())),
        }
    }
}

/// One row of the EH dump. `f_inv` is computed as `F − √κ/s`, so the
/// product column checks `f · f⁻¹ = 1` between independent formulas.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EhDumpRow {
    pub s: f64,
    pub big_f: f64,
    pub small_f: f64,
    pub f_inv: f64,
    pub omega_tilde_norm_sq: f64,
    pub sigma_norm_sq: f64,
}

pub fn eh_rows(kappa: f64, grid: &[f64]) -> Result<Vec<EhDumpRow>, CliError> {
    let num = |e: &dyn std::fmt::Display| CliError::Numeric(e.to_string());
    let pa = EhParams::new(kappa).map_err(|e| num(&e))?;
    let g = eh_metric(pa);
    let tilde = l2_form(pa).map_err(|e| num(&e))?;
    let spec = EhModeSpec::new(0, 0, 1, kappa).map_err(|e| num(&e))?;
    let sigma = eh_zero_mode(&spec);
    let pr = pa.profiles();
    grid.iter()
        .map(|&s| {
            let p = ChartPoint::from_parts(&[(s.sqrt(), 0.0), (0.0, 0.0)]).map_err(|e| num(&e))?;
            let big_f = pr.big_f(s).map_err(|e| num(&e))?;
            Ok(EhDumpRow {
                s,
                big_f,
                small_f: pr.small_f(s).map_err(|e| num(&e))?,
                f_inv: big_f - kappa.sqrt() / s,
                omega_tilde_norm_sq: norm_sq_at(&tilde, &g, &p).map_err(|e| num(&e))?,
                sigma_norm_sq: norm_sq_at(&sigma, &g, &p).map_err(|e| num(&e))?,
            })
        })
        .collect()
}

fn write_eh(path: &Path, kappa: f64, grid: &[f64]) -> Result<(), CliError> {
    let rows = eh_rows(kappa, grid)?;
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(["s", "F", "f", "f_inv", "f_times_f_inv", "omega_tilde_norm_sq", "sigma_norm_sq"])?;
    for r in rows {
        let vals = [r.s, r.big_f, r.small_f, r.f_inv, r.small_f * r.f_inv, r.omega_tilde_norm_sq, r.sigma_norm_sq];
        w.write_record(vals.map(|x| format!("{x:.12e}")))?;
    }
    w.flush()?;
    Ok(())
}

/// Writes the requested profile table into `dir` and returns its path.
pub fn dump_profiles(
    profile: Profile,
    grid: Grid,
    kappa: f64,
    n: usize,
    dir: &Path,
) -> Result<PathBuf, CliError> {
    fs::create_dir_all(dir)?;
    let values = grid.values();
    match profile {
        Profile::Eh => {
            let path = dir.join(format!("profile_eh_kappa{kappa}.csv"));
            write_eh(&path, kappa, &values)?;
            Ok(path)
        }
        Profile::Calabi => {
            let path = dir.join(format!("profile_calabi_n{n}_kappa{kappa}.csv"));
            let params = CalabiParams::new(n, kappa).map_err(|e| CliError::Numeric(e.to_string()))?;
            let file = fs::File::create(&path)?;
            calabi_geometry::write_profile_csv(params, &values, file)
                .map_err(|e| CliError::Numeric(e.to_string()))?;
            Ok(path)
        }
    }
}
