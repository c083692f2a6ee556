use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use lorentz_zeta::experiment::{Command, OutputRecord, Param, RunConfig};
use lorentz_zeta::quadrature::Execution;
use lorentz_zeta::{Error, Result};

/// Lorentz-weighted integrals of ln|zeta| and the hidden-symmetry map.
///
/// Commands: eval, potential, phi1, phi2, field, solve, experiment, figure, validate.
#[derive(Parser, Debug)]
#[command(name = "lorentz-zeta", version)]
struct Cli {
    /// Command to run.
    command: String,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    rho: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    rho0: Option<f64>,
    #[arg(long)]
    theta_max: Option<f64>,
    #[arg(long)]
    t_max: Option<f64>,
    #[arg(long)]
    tol: Option<f64>,
    /// Imaginary part of the evaluation point (eval).
    #[arg(long, allow_hyphen_values = true)]
    t: Option<f64>,
    /// Sweep grid START:STOP:STEP over alpha (solve).
    #[arg(long)]
    grid: Option<String>,
    /// Field variant: d_alpha or d_rho.
    #[arg(long)]
    variant: Option<String>,
    /// Figure number: 1, 2 or 3.
    #[arg(long)]
    id: Option<u32>,
    /// Samples per figure series (at least 16).
    #[arg(long)]
    resolution: Option<u32>,
    /// Validation suite: quadrature, zeta, theorem1 or symmetry.
    #[arg(long)]
    suite: Option<String>,
    /// csv or json.
    #[arg(long, default_value = "json")]
    format: String,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Zero-ordinate table, one ordinate per line.
    #[arg(long)]
    zeros: Option<PathBuf>,
    /// Evaluate panels and sweep points on the thread pool.
    #[arg(long)]
    parallel: bool,
}

impl Cli {
    fn into_config(self) -> Result<RunConfig> {
        let mut cfg = RunConfig::new(self.command.parse::<Command>()?);
        cfg.format = self.format.parse()?;
        cfg.output_path = self.out;
        cfg.zeros_path = self.zeros;
        cfg.execution = if self.parallel { Execution::Parallel } else { Execution::Serial };
        let numbers = [
            ("alpha", self.alpha),
            ("rho", self.rho),
            ("rho0", self.rho0),
            ("theta_max", self.theta_max),
            ("t_max", self.t_max),
            ("tol", self.tol),
            ("t", self.t),
            ("id", self.id.map(f64::from)),
            ("resolution", self.resolution.map(f64::from)),
        ];
        for (key, value) in numbers {
            if let Some(v) = value {
                cfg.parameters.insert(key.into(), Param::Number(v));
            }
        }
        for (key, value) in [("grid", self.grid), ("variant", self.variant), ("suite", self.suite)] {
            if let Some(v) = value {
                cfg.parameters.insert(key.into(), Param::Text(v));
            }
        }
        Ok(cfg)
    }
}

fn report_checks(record: &OutputRecord) {
    for c in &record.checks {
        eprintln!(
            "{} {:<48} observed {:.3e} allowed {:.3e}",
            if c.pass { "PASS" } else { "FAIL" },
            c.name,
            c.observed,
            c.allowed
        );
    }
}

fn run(cli: Cli) -> Result<bool> {
    let cfg = cli.into_config()?;
    let record = cfg.execute()?;
    cfg.emit(&record)?;
    report_checks(&record);
    Ok(record.all_checks_pass())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("lorentz-zeta: {e}");
            ExitCode::from(Error::exit_code(&e) as u8)
        }
    }
}
