use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::Context;
use clap::{Parser, Subcommand};
use spinc_cli::{dump_profiles, run, Format, Grid, Profile, RunConfig, Suite, OUT_DIR_ENV};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(name = "spinc", version, about = "Verify Dirac zero-mode identities on Eguchi-Hanson and Calabi spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and write a report.
    Verify(VerifyArgs),
    /// Write radial profile tables over an s-grid.
    Dump(DumpArgs),
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// Flat `key = value` file; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_enum)]
    suite: Option<Suite>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, allow_negative_numbers = true)]
    kappa: Option<f64>,
    #[arg(long)]
    ell_max: Option<i64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    samples: Option<usize>,
    /// Per-check tolerance override, `check_id=value`; repeatable.
    #[arg(long = "tol", value_name = "ID=VALUE")]
    tolerances: Vec<String>,
    /// Report path; defaults to `$SPINC_OUT_DIR/report.<format>`, else stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(clap::Args)]
struct DumpArgs {
    #[arg(long, value_enum)]
    profile: Profile,
    /// `a,b,k`: k evenly spaced values of s on [a, b].
    #[arg(long)]
    grid: Grid,
    #[arg(long, default_value_t = 1.0)]
    kappa: f64,
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// Output directory; defaults to `$SPINC_OUT_DIR`, else the current directory.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn build_config(args: &VerifyArgs) -> anyhow::Result<RunConfig> {
    let mut cfg = RunConfig::default();
    if let Some(path) = &args.config {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        cfg.apply_file(&text)?;
    }
    if let Some(v) = args.suite { cfg.suite = v; }
    if let Some(v) = args.n { cfg.n = v; }
    if let Some(v) = args.kappa { cfg.kappa = v; }
    if let Some(v) = args.ell_max { cfg.ell_max = v; }
    if let Some(v) = args.seed { cfg.seed = v; }
    if let Some(v) = args.samples { cfg.samples = v; }
    if let Some(v) = args.format { cfg.format = v; }
    if let Some(v) = &args.out { cfg.output = Some(v.clone()); }
    for t in &args.tolerances {
        let (k, v) = t.split_once('=').with_context(|| format!("--tol expects ID=VALUE, got {t:?}"))?;
        cfg.set(&format!("tol.{}", k.trim()), v.trim())?;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn default_dir() -> Option<PathBuf> {
    std::env::var_os(OUT_DIR_ENV).map(PathBuf::from)
}

fn verify(args: VerifyArgs) -> ExitCode {
    let cfg = match build_config(&args) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("usage error: {e:#}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let mut report = match run(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("usage error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    report.generated_at = SystemTime::now().duration_since(UNIX_EPOCH).ok().map(|d| d.as_secs());
    let ext = match cfg.format {
        Format::Json => "json",
        Format::Csv => "csv",
    };
    let target = cfg.output.clone().or_else(|| default_dir().map(|d| d.join(format!("report.{ext}"))));
    let written = match &target {
        Some(path) => report.write_atomic(cfg.format, path),
        None => report.write(cfg.format, std::io::stdout().lock()),
    };
    if let Err(e) = written {
        eprintln!("error writing report: {e}");
        return ExitCode::from(EXIT_INTERNAL);
    }
    let s = report.summary;
    eprintln!("{} checks: {} passed, {} failed", s.total, s.passed, s.failed);
    for c in report.checks.iter().filter(|c| !c.passed()) {
        eprintln!("FAIL {} residual {:e} tolerance {:e}: {}", c.check_id, c.max_residual, c.tolerance, c.details);
    }
    if s.numeric_errors > 0 {
        ExitCode::from(EXIT_INTERNAL)
    } else if s.failed > 0 {
        ExitCode::from(EXIT_FAIL)
    } else {
        ExitCode::SUCCESS
    }
}

fn dump(args: DumpArgs) -> ExitCode {
    let dir = args.out.or_else(default_dir).unwrap_or_else(|| Path::new(".").to_path_buf());
    match dump_profiles(args.profile, args.grid, args.kappa, args.n, &dir) {
        Ok(path) => {
            println!("{}", path.display());
            ExitCode::SUCCESS
        }
        Err(spinc_cli::CliError::Io(e)) => {
            eprintln!("cannot write profile: {e}");
            ExitCode::from(EXIT_INTERNAL)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Verify(a) => verify(a),
        Command::Dump(a) => dump(a),
    }
}
