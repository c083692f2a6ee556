//! Sampled data behind the three figures.
//!
//! 1. `ln|zeta(rho + i rho0 tan theta)|` on the inside and outside lines of
//!    the strip experiment, for `theta` over a full turn.
//! 2. The same integrands on `[0, theta_max]`.
//! 3. The two potentials, `ln(1 / (1 - 2 alpha))` inside and
//!    `ln zeta(2 alpha')` outside, with tangent lines at the points where
//!    both equal 1.

use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::potentials::{electric_field, FieldVariant};
use crate::quadrature::DEFAULT_THETA_MAX;
use crate::symmetry::{solve_alpha_prime, SymmetryPair, DEFAULT_SOLVER_TOL};
use crate::zeta::{log_abs_zeta, ComplexValue, EvalOptions, ZetaLine};

use super::record::{Budget, DataRow, OutputRecord};
use super::strip::experiment_alpha;

pub const MIN_RESOLUTION: usize = 16;

/// `|t|` cap for figure 1 samples where `tan theta` blows up near odd
/// multiples of `pi/2`.
pub const FIGURE_T_CAP: f64 = 1000.0;

/// Upper end of the outside axis in figure 3.
pub const ALPHA_PRIME_AXIS_MAX: f64 = 3.0;
/// Lower end (exclusive) of the outside axis in figure 3.
pub const ALPHA_PRIME_AXIS_MIN: f64 = 0.5 + 1e-3;
/// Half-width of the tangent segments in figure 3.
pub const TANGENT_HALF_WIDTH: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureId {
    Integrands,
    Truncated,
    Potentials,
}

impl TryFrom<u32> for FigureId {
    type Error = Error;

    fn try_from(id: u32) -> Result<Self> {
        match id {
            1 => Ok(FigureId::Integrands),
            2 => Ok(FigureId::Truncated),
            3 => Ok(FigureId::Potentials),
            other => Err(Error::InvalidFigure(other)),
        }
    }
}

impl FigureId {
    pub fn number(self) -> u32 {
        match self {
            FigureId::Integrands => 1,
            FigureId::Truncated => 2,
            FigureId::Potentials => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FigureOptions {
    pub resolution: usize,
    /// Right end of the figure 2 range.
    pub theta_max: f64,
    pub eval: EvalOptions,
}

impl Default for FigureOptions {
    fn default() -> Self {
        Self {
            resolution: 512,
            theta_max: DEFAULT_THETA_MAX,
            eval: EvalOptions::default(),
        }
    }
}

fn experiment_pair(eval: &EvalOptions) -> Result<SymmetryPair> {
    solve_alpha_prime(experiment_alpha(), DEFAULT_SOLVER_TOL, eval)
}

fn lines(pair: &SymmetryPair, height: f64, eval: &EvalOptions) -> Result<[(&'static str, ZetaLine); 2]> {
    let eval = EvalOptions {
        max_terms: eval.max_terms.max((0.9 * height) as usize + 64),
        ..*eval
    };
    Ok([
        ("inside", ZetaLine::new(pair.rho_inside, height, &eval)?),
        ("outside", ZetaLine::new(pair.rho_outside, height, &eval)?),
    ])
}

fn sample_integrands(
    record: &mut OutputRecord,
    pair: &SymmetryPair,
    thetas: &[f64],
    height: f64,
    eval: &EvalOptions,
) -> Result<()> {
    for (series, line) in lines(pair, height, eval)? {
        for &theta in thetas {
            let t = (pair.rho0 * theta.tan()).clamp(-FIGURE_T_CAP, FIGURE_T_CAP);
            let y = line.eval(t)?.norm().ln();
            record.data.push(DataRow {
                x: theta,
                series: series.into(),
                y,
            });
        }
    }
    Ok(())
}

fn pair_inputs(record: &mut OutputRecord, pair: &SymmetryPair) {
    record
        .result("rho_inside", pair.rho_inside, Budget::EXACT)
        .result("rho_outside", pair.rho_outside, Budget::Bound(DEFAULT_SOLVER_TOL))
        .result("rho0", pair.rho0, Budget::EXACT);
}

fn linspace_open_left(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    (1..=n).map(move |k| lo + (hi - lo) * k as f64 / n as f64)
}

fn figure_potentials(record: &mut OutputRecord, opts: &FigureOptions) -> Result<()> {
    let n = opts.resolution;
    let pair = experiment_pair(&opts.eval)?;
    for alpha in (0..n).map(|k| 0.5 * (k + 1) as f64 / (n + 1) as f64) {
        record.data.push(DataRow {
            x: alpha,
            series: "alpha_inside".into(),
            y: -(-2.0 * alpha).ln_1p(),
        });
    }
    for alpha_prime in linspace_open_left(ALPHA_PRIME_AXIS_MIN, ALPHA_PRIME_AXIS_MAX, n) {
        record.data.push(DataRow {
            x: alpha_prime,
            series: "alpha_prime_outside".into(),
            y: log_abs_zeta(ComplexValue::new(2.0 * alpha_prime, 0.0), &opts.eval)?,
        });
    }
    let slope_inside = electric_field(pair.alpha, FieldVariant::DAlpha, &opts.eval)?;
    let slope_outside = electric_field(pair.alpha_prime, FieldVariant::DAlpha, &opts.eval)?;
    for (series, x0, slope) in [
        ("tangent_inside", pair.alpha, slope_inside),
        ("tangent_outside", pair.alpha_prime, slope_outside),
    ] {
        for k in 0..n {
            let x = x0 - TANGENT_HALF_WIDTH + 2.0 * TANGENT_HALF_WIDTH * k as f64 / (n - 1) as f64;
            record.data.push(DataRow {
                x,
                series: series.into(),
                y: pair.potential + slope * (x - x0),
            });
        }
    }
    record
        .result("alpha_marked", pair.alpha, Budget::EXACT)
        .result("alpha_prime_marked", pair.alpha_prime, Budget::Bound(DEFAULT_SOLVER_TOL))
        .result("potential_marked", pair.potential, Budget::EXACT)
        .result("slope_inside", slope_inside, Budget::EXACT)
        .result("slope_outside", slope_outside, Budget::Bound(opts.eval.abs_tol));
    Ok(())
}

/// Figure data as an [`OutputRecord`] whose `data` section holds
/// `(x, series, y)` rows.
pub fn cmd_figure(figure_id: u32, opts: &FigureOptions) -> Result<OutputRecord> {
    let id = FigureId::try_from(figure_id)?;
    if opts.resolution < MIN_RESOLUTION {
        return Err(Error::Usage(format!(
            "resolution must be at least {MIN_RESOLUTION}, got {}",
            opts.resolution
        )));
    }
    opts.eval.validate()?;
    let n = opts.resolution;
    let mut record = OutputRecord::new("figure");
    record.input("id", id.number()).input("resolution", n as u64);
    match id {
        FigureId::Integrands => {
            let pair = experiment_pair(&opts.eval)?;
            let thetas: Vec<f64> = (0..n).map(|k| TAU * k as f64 / n as f64).collect();
            sample_integrands(&mut record, &pair, &thetas, FIGURE_T_CAP, &opts.eval)?;
            pair_inputs(&mut record, &pair);
            record.input("t_cap", FIGURE_T_CAP);
        }
        FigureId::Truncated => {
            if !(opts.theta_max > 0.0 && opts.theta_max < 0.5 * PI) {
                return Err(Error::OutOfDomain(format!(
                    "theta_max must lie in (0, pi/2), got {}",
                    opts.theta_max
                )));
            }
            let pair = experiment_pair(&opts.eval)?;
            let thetas: Vec<f64> = (0..n).map(|k| opts.theta_max * k as f64 / (n - 1) as f64).collect();
            let height = pair.height(opts.theta_max);
            sample_integrands(&mut record, &pair, &thetas, height, &opts.eval)?;
            pair_inputs(&mut record, &pair);
            record.input("theta_max", opts.theta_max);
        }
        FigureId::Potentials => figure_potentials(&mut record, opts)?,
    }
    record.error_budget.insert("data".into(), Budget::Bound(opts.eval.abs_tol));
    Ok(record)
}

/// Rows of one series, in emission order.
pub fn series<'a>(record: &'a OutputRecord, name: &'a str) -> impl Iterator<Item = &'a DataRow> + 'a {
    record.data.iter().filter(move |r| r.series == name)
}

/// `(2 / pi)` times the trapezoid integral of one series.
pub fn trapezoid_mean(record: &OutputRecord, name: &str) -> f64 {
    let rows: Vec<_> = series(record, name).collect();
    let area: f64 = rows
        .windows(2)
        .map(|w| 0.5 * (w[1].x - w[0].x) * (w[0].y + w[1].y))
        .sum();
    2.0 / PI * area
}
