//! Run configuration and dispatch to the library operations.

use std::collections::BTreeMap;
use std::path::PathBuf;

use crate::error::{Error, Result};
use crate::potentials::{electric_field, phi1_report, phi2_report, phi_report, remark_potential, FieldVariant, PotentialReport};
use crate::quadrature::{Execution, LineOptions, ZeroOrdinates, DEFAULT_THETA_MAX};
use crate::symmetry::{solve_alpha_prime, sweep_symmetry, DEFAULT_SOLVER_TOL};
use crate::zeta::{zeta, zeta_log_derivative, ComplexValue, EvalOptions};

use super::figure::{cmd_figure, FigureOptions};
use super::record::{Budget, DataRow, OutputFormat, OutputRecord};
use super::strip::{cmd_experiment, ExperimentConfig};
use super::validate::{cmd_validate, Suite};

/// Largest number of points a `--grid` may expand to.
pub const GRID_LIMIT: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Eval,
    Potential,
    Phi1,
    Phi2,
    Field,
    Solve,
    Experiment,
    Figure,
    Validate,
}

impl Command {
    pub const ALL: [Command; 9] = [
        Command::Eval,
        Command::Potential,
        Command::Phi1,
        Command::Phi2,
        Command::Field,
        Command::Solve,
        Command::Experiment,
        Command::Figure,
        Command::Validate,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Eval => "eval",
            Command::Potential => "potential",
            Command::Phi1 => "phi1",
            Command::Phi2 => "phi2",
            Command::Field => "field",
            Command::Solve => "solve",
            Command::Experiment => "experiment",
            Command::Figure => "figure",
            Command::Validate => "validate",
        }
    }

    /// `(required, optional)` parameter keys.
    fn keys(self) -> (&'static [&'static str], &'static [&'static str]) {
        match self {
            Command::Eval => (&["rho"], &["t", "tol"]),
            Command::Potential => (&["rho"], &["rho0", "t_max", "tol"]),
            Command::Phi1 | Command::Phi2 => (&["alpha"], &["t_max", "tol"]),
            Command::Field => (&["alpha"], &["variant", "tol"]),
            Command::Solve => (&[], &["alpha", "grid", "tol", "theta_max", "t_max"]),
            Command::Experiment => (&[], &["theta_max", "tol"]),
            Command::Figure => (&["id"], &["resolution", "theta_max", "tol"]),
            Command::Validate => (&["suite"], &["t_max", "tol"]),
        }
    }

    fn uses_zeros(self) -> bool {
        !matches!(self, Command::Eval | Command::Field | Command::Figure)
    }
}

impl std::str::FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown command {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Param {
    Number(f64),
    Text(String),
}

impl From<f64> for Param {
    fn from(v: f64) -> Self {
        Param::Number(v)
    }
}

impl From<&str> for Param {
    fn from(v: &str) -> Self {
        Param::Text(v.into())
    }
}

impl From<String> for Param {
    fn from(v: String) -> Self {
        Param::Text(v)
    }
}

const TEXT_KEYS: [&str; 3] = ["grid", "variant", "suite"];
const INTEGER_KEYS: [&str; 2] = ["id", "resolution"];

/// `START:STOP:STEP`, inclusive of `STOP` up to rounding.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>> {
    let bad = || Error::Usage(format!("grid must be START:STOP:STEP, got {spec:?}"));
    let parts: Vec<f64> = spec
        .split(':')
        .map(|p| p.trim().parse::<f64>().map_err(|_| bad()))
        .collect::<Result<_>>()?;
    let [start, stop, step] = parts[..] else {
        return Err(bad());
    };
    if !(start.is_finite() && stop.is_finite() && step.is_finite() && step > 0.0 && start <= stop) {
        return Err(bad());
    }
    let span = ((stop - start) / step + 1e-9).floor();
    if span >= GRID_LIMIT as f64 {
        return Err(Error::Usage(format!("grid has more than {GRID_LIMIT} points")));
    }
    // Round to 12 significant digits so 0.1 + 2 * 0.1 prints as 0.3.
    Ok((0..=span as usize)
        .map(|k| {
            let x = start + k as f64 * step;
            format!("{x:.11e}").parse().unwrap_or(x)
        })
        .collect())
}

/// Everything one invocation needs: the command, its parameters and where
/// the record goes.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub parameters: BTreeMap<String, Param>,
    pub output_path: Option<PathBuf>,
    pub format: OutputFormat,
    pub zeros_path: Option<PathBuf>,
    pub execution: Execution,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            parameters: BTreeMap::new(),
            output_path: None,
            format: OutputFormat::default(),
            zeros_path: None,
            execution: Execution::Serial,
        }
    }

    pub fn with(mut self, key: &str, value: impl Into<Param>) -> Self {
        self.parameters.insert(key.into(), value.into());
        self
    }

    fn number(&self, key: &str) -> Option<f64> {
        match self.parameters.get(key) {
            Some(Param::Number(v)) => Some(*v),
            _ => None,
        }
    }

    fn text(&self, key: &str) -> Option<&str> {
        match self.parameters.get(key) {
            Some(Param::Text(v)) => Some(v),
            _ => None,
        }
    }

    /// Check keys, types and value formats against the command. Runs no
    /// numerics.
    pub fn validate(&self) -> Result<()> {
        let name = self.command.name();
        let (required, optional) = self.command.keys();
        for key in required {
            if !self.parameters.contains_key(*key) {
                return Err(Error::Usage(format!("{name} needs --{}", key.replace('_', "-"))));
            }
        }
        for (key, value) in &self.parameters {
            if !required.contains(&key.as_str()) && !optional.contains(&key.as_str()) {
                return Err(Error::Usage(format!("{name} does not take --{}", key.replace('_', "-"))));
            }
            match (TEXT_KEYS.contains(&key.as_str()), value) {
                (true, Param::Text(_)) => {}
                (false, Param::Number(v)) if v.is_finite() => {}
                _ => return Err(Error::Usage(format!("bad value for --{}", key.replace('_', "-")))),
            }
            if INTEGER_KEYS.contains(&key.as_str()) {
                let v = self.number(key).unwrap_or(-1.0);
                if !(v >= 1.0 && v.fract() == 0.0 && v <= u32::MAX as f64) {
                    return Err(Error::Usage(format!("--{key} must be a positive integer")));
                }
            }
        }
        if let Some(tol) = self.number("tol") {
            if tol <= 0.0 {
                return Err(Error::Usage("--tol must be positive".into()));
            }
        }
        if let Some(t_max) = self.number("t_max") {
            if t_max <= 0.0 {
                return Err(Error::Usage("--t-max must be positive".into()));
            }
        }
        if self.zeros_path.is_some() && !self.command.uses_zeros() {
            return Err(Error::Usage(format!("{name} does not take --zeros")));
        }
        match self.command {
            Command::Field => {
                if let Some(v) = self.text("variant") {
                    v.parse::<FieldVariant>()?;
                }
            }
            Command::Validate => {
                self.text("suite").unwrap_or_default().parse::<Suite>()?;
            }
            Command::Figure => {
                let id = self.number("id").unwrap_or_default();
                if !(1.0..=3.0).contains(&id) {
                    return Err(Error::InvalidFigure(id as u32));
                }
            }
            Command::Solve => match (self.parameters.contains_key("alpha"), self.text("grid")) {
                (true, None) => {}
                (false, Some(g)) => {
                    parse_grid(g)?;
                }
                _ => return Err(Error::Usage("solve needs exactly one of --alpha or --grid".into())),
            },
            _ => {}
        }
        Ok(())
    }

    fn line_options(&self) -> Result<LineOptions> {
        let mut opts = LineOptions {
            execution: self.execution,
            ..LineOptions::default()
        };
        if let Some(t_max) = self.number("t_max") {
            opts.t_max = t_max;
        }
        if let Some(tol) = self.number("tol") {
            opts.tol = tol;
        }
        if let Some(path) = &self.zeros_path {
            opts.zeros = Some(ZeroOrdinates::from_file(path)?);
        }
        Ok(opts)
    }

    fn eval_options(&self) -> EvalOptions {
        EvalOptions {
            abs_tol: self.number("tol").unwrap_or(EvalOptions::default().abs_tol),
            ..EvalOptions::default()
        }
    }

    /// Validate, then run the command.
    pub fn execute(&self) -> Result<OutputRecord> {
        self.validate()?;
        let mut record = match self.command {
            Command::Eval => self.eval()?,
            Command::Potential => {
                let opts = self.line_options()?;
                let rho = self.number("rho").unwrap_or_default();
                let report = match self.number("rho0") {
                    Some(rho0) => phi_report(rho, rho0, &opts)?,
                    None => remark_potential(rho, &opts)?,
                };
                potential_record("potential", &report, &opts)
            }
            Command::Phi1 | Command::Phi2 => {
                let opts = self.line_options()?;
                let alpha = self.number("alpha").unwrap_or_default();
                let report = if self.command == Command::Phi1 {
                    phi1_report(alpha, &opts)?
                } else {
                    phi2_report(alpha, &opts)?
                };
                potential_record(self.command.name(), &report, &opts)
            }
            Command::Field => {
                let alpha = self.number("alpha").unwrap_or_default();
                let variant: FieldVariant = self.text("variant").unwrap_or("d_alpha").parse()?;
                let eval = self.eval_options();
                let field = electric_field(alpha, variant, &eval)?;
                let budget = if alpha < 0.5 { Budget::EXACT } else { Budget::Bound(eval.abs_tol) };
                let mut r = OutputRecord::new("field");
                r.input("variant", serde_json::to_value(variant)?);
                r.result("field", field, budget);
                r
            }
            Command::Solve => self.solve()?,
            Command::Experiment => {
                let opts = self.line_options()?;
                let cfg = ExperimentConfig {
                    theta_max: self.number("theta_max").unwrap_or(DEFAULT_THETA_MAX),
                    tol: opts.tol,
                    execution: self.execution,
                    zeros: opts.zeros,
                    ..ExperimentConfig::default()
                };
                cmd_experiment(&cfg)?
            }
            Command::Figure => {
                let opts = FigureOptions {
                    resolution: self.number("resolution").map_or(512, |v| v as usize),
                    theta_max: self.number("theta_max").unwrap_or(DEFAULT_THETA_MAX),
                    eval: self.eval_options(),
                };
                cmd_figure(self.number("id").unwrap_or_default() as u32, &opts)?
            }
            Command::Validate => {
                let suite: Suite = self.text("suite").unwrap_or_default().parse()?;
                cmd_validate(suite, &self.line_options()?)?
            }
        };
        for (key, value) in &self.parameters {
            let v = match value {
                Param::Number(x) => serde_json::json!(x),
                Param::Text(s) => serde_json::json!(s),
            };
            record.inputs.insert(key.clone(), v);
        }
        if let Some(path) = &self.zeros_path {
            record.input("zeros", path.display().to_string());
        }
        Ok(record)
    }

    /// Write the finished record to `output_path` or stdout.
    pub fn emit(&self, record: &OutputRecord) -> Result<()> {
        record.emit(self.format, self.output_path.as_deref())
    }

    fn eval(&self) -> Result<OutputRecord> {
        let eval = self.eval_options();
        let s = ComplexValue::new(self.number("rho").unwrap_or_default(), self.number("t").unwrap_or(0.0));
        let z = zeta(s, &eval)?;
        let modulus = z.norm();
        let mut r = OutputRecord::new("eval");
        let tol = eval.abs_tol;
        r.result("zeta_re", z.re, Budget::Bound(tol))
            .result("zeta_im", z.im, Budget::Bound(tol))
            .result("abs", modulus, Budget::Bound(tol));
        if modulus > 0.0 {
            r.result("ln_abs", modulus.ln(), Budget::Bound(tol / modulus));
            let d = zeta_log_derivative(s, &eval)?;
            let budget = Budget::Bound(tol * (1.0 + d.norm()) / modulus);
            r.result("log_derivative_re", d.re, budget)
                .result("log_derivative_im", d.im, budget);
        }
        Ok(r)
    }

    fn solve(&self) -> Result<OutputRecord> {
        let tol = self.number("tol").unwrap_or(DEFAULT_SOLVER_TOL);
        let mut r = OutputRecord::new("solve");
        if let Some(alpha) = self.number("alpha") {
            let pair = solve_alpha_prime(alpha, tol, &EvalOptions::default())?;
            let log_slope = zeta_log_derivative(ComplexValue::new(2.0 * pair.alpha_prime, 0.0), &EvalOptions::default())?
                .re
                .abs();
            let x_err = tol / log_slope;
            r.result("alpha_prime", pair.alpha_prime, Budget::Bound(0.5 * x_err))
                .result("two_alpha_prime", 2.0 * pair.alpha_prime, Budget::Bound(x_err))
                .result("rho_inside", pair.rho_inside, Budget::EXACT)
                .result("rho_outside", pair.rho_outside, Budget::Bound(x_err))
                .result("rho0", pair.rho0, Budget::EXACT)
                .result("potential", pair.potential, Budget::EXACT);
            return Ok(r);
        }
        let grid = parse_grid(self.text("grid").unwrap_or_default())?;
        let theta_max = self.number("theta_max").unwrap_or(DEFAULT_THETA_MAX);
        let opts = self.line_options()?;
        let mut worst = 0.0f64;
        for point in sweep_symmetry(&grid, theta_max, tol, &opts) {
            let label = format!("alpha={}", point.alpha);
            match point.outcome {
                Ok(c) => {
                    let combined = c.residual.combined_error();
                    worst = worst.max(combined);
                    for (series, y) in [
                        ("alpha_prime", c.pair.alpha_prime),
                        ("inside", c.residual.inside.value),
                        ("outside", c.residual.outside.value),
                        ("difference", c.residual.difference),
                        ("combined_error", combined),
                    ] {
                        r.data.push(DataRow {
                            x: point.alpha,
                            series: series.into(),
                            y,
                        });
                    }
                    r.check(&label, c.residual.difference.abs(), combined);
                }
                Err(e) => r.failed_check(&label, &e.to_string()),
            }
        }
        r.error_budget.insert("data".into(), Budget::Bound(worst));
        Ok(r)
    }
}

fn potential_record(command: &str, report: &PotentialReport, opts: &LineOptions) -> OutputRecord {
    let mut r = OutputRecord::new(command);
    r.input("kind", report.kind.name());
    let q = &report.quadrature;
    let closed_budget = match (report.kind.name(), report.alpha < 0.5) {
        ("phi1" | "phi2", true) => Budget::EXACT,
        _ => Budget::Bound(opts.eval.abs_tol),
    };
    r.result("alpha", report.alpha, Budget::EXACT)
        .result("rho", report.rho, Budget::EXACT)
        .result("rho0", report.rho0, Budget::EXACT)
        .result("numeric", report.numeric, Budget::Bound(report.total_error()))
        .result("closed", report.closed, closed_budget)
        .result("residual", report.residual, Budget::Bound(report.total_error()))
        .result("quadrature_error", q.error_estimate, Budget::EXACT)
        .result("tail_estimate", q.tail_estimate, Budget::EXACT)
        .result("truncation_t", q.truncation_t, Budget::EXACT)
        .result("panels", q.panels as f64, Budget::EXACT);
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids() {
        assert_eq!(parse_grid("0.1:0.4:0.1").unwrap(), vec![0.1, 0.2, 0.3, 0.4]);
        assert_eq!(parse_grid("0.2:0.2:1").unwrap(), vec![0.2]);
        for bad in ["0.1:0.4", "a:b:c", "0.4:0.1:0.1", "0:1:0", "0:1:-1"] {
            assert!(matches!(parse_grid(bad), Err(Error::Usage(_))), "{bad}");
        }
    }

    #[test]
    fn validation_runs_before_numerics() {
        let missing = RunConfig::new(Command::Phi1);
        assert!(matches!(missing.execute(), Err(Error::Usage(_))));
        let extra = RunConfig::new(Command::Field).with("alpha", 0.25).with("rho0", 1.0);
        assert!(matches!(extra.validate(), Err(Error::Usage(_))));
        let both = RunConfig::new(Command::Solve).with("alpha", 0.2).with("grid", "0.1:0.2:0.1");
        assert!(matches!(both.validate(), Err(Error::Usage(_))));
        let figure = RunConfig::new(Command::Figure).with("id", 4.0);
        assert_eq!(figure.validate().unwrap_err().exit_code(), 2);
        let variant = RunConfig::new(Command::Field).with("alpha", 0.25).with("variant", "d_theta");
        assert!(matches!(variant.validate(), Err(Error::Usage(_))));
        let mut zeros = RunConfig::new(Command::Eval).with("rho", 2.0);
        zeros.zeros_path = Some("zeros.txt".into());
        assert!(matches!(zeros.validate(), Err(Error::Usage(_))));
        let text_as_number = RunConfig::new(Command::Eval).with("rho", "two");
        assert!(matches!(text_as_number.validate(), Err(Error::Usage(_))));
    }

    #[test]
    fn scalar_commands() {
        let rec = RunConfig::new(Command::Field).with("alpha", 0.25).execute().unwrap();
        assert_eq!(rec.results["field"], 4.0);
        assert_eq!(rec.error_budget["field"], Budget::EXACT);
        let rec = RunConfig::new(Command::Solve).with("alpha", 0.31606).execute().unwrap();
        assert!((rec.results["alpha_prime"] - 0.73723).abs() < 1e-5);
        let rec = RunConfig::new(Command::Eval).with("rho", 2.0).execute().unwrap();
        assert!((rec.results["zeta_re"] - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-12);
        assert!(rec.is_schema_complete());
        assert_eq!(rec.inputs["rho"], serde_json::json!(2.0));
    }

    #[test]
    fn computational_errors_exit_one() {
        let err = RunConfig::new(Command::Phi1).with("alpha", 0.5).execute().unwrap_err();
        assert_eq!(err.exit_code(), 1);
    }
}
