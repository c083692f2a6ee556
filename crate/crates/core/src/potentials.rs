//! Lorentz potentials of `ln|zeta|`: numeric line integrals next to their
//! closed forms, and the two electric-field definitions.
//!
//! With `rho = 1/2 + alpha` the scale is `rho0 = |1/2 - alpha|`, so inside
//! the strip `rho + rho0 = 1` and outside `rho + rho0 = 2 alpha`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quadrature::{
    integrate_lorentz, integrate_weighted, zeta_line, Kernel, LineOptions, LorentzMeasure,
    QuadratureResult, TailPolicy,
};
use crate::zeta::{zeta, zeta_log_derivative, ComplexValue, EvalOptions, EULER_GAMMA};

/// `|alpha - 1/2|` below this is refused: both closed-form branches diverge.
pub const BOUNDARY_GUARD: f64 = 1e-6;

/// `|rho + rho0 - 1|` below this uses the pole-residue limit
/// `zeta(x) (x - 1) -> 1`.
pub const RESIDUE_LIMIT_GUARD: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PotentialKind {
    Phi,
    Phi1,
    Phi2,
    Remark,
}

impl PotentialKind {
    pub fn name(self) -> &'static str {
        match self {
            PotentialKind::Phi => "phi",
            PotentialKind::Phi1 => "phi1",
            PotentialKind::Phi2 => "phi2",
            PotentialKind::Remark => "remark",
        }
    }
}

/// Numeric integral, closed form and their difference for one potential.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialReport {
    pub kind: PotentialKind,
    pub alpha: f64,
    pub rho: f64,
    pub rho0: f64,
    pub numeric: f64,
    pub closed: f64,
    /// `numeric - closed`.
    pub residual: f64,
    pub quadrature: QuadratureResult,
}

impl PotentialReport {
    fn new(kind: PotentialKind, rho: f64, rho0: f64, closed: f64, quadrature: QuadratureResult) -> Self {
        Self {
            kind,
            alpha: rho - 0.5,
            rho,
            rho0,
            numeric: quadrature.value,
            closed,
            residual: quadrature.value - closed,
            quadrature,
        }
    }

    /// Quadrature error plus tail bound.
    pub fn total_error(&self) -> f64 {
        self.quadrature.total_error()
    }

    pub fn within_budget(&self) -> bool {
        self.residual.abs() <= self.total_error()
    }
}

fn zeta_real(x: f64, eval: &EvalOptions) -> Result<f64> {
    Ok(zeta(ComplexValue::new(x, 0.0), eval)?.re)
}

fn log_derivative_real(x: f64, eval: &EvalOptions) -> Result<f64> {
    Ok(zeta_log_derivative(ComplexValue::new(x, 0.0), eval)?.re)
}

/// `ln(zeta(x) (x - 1))`, taking the residue limit at `x = 1`.
fn ln_regularized_zeta(x: f64, eval: &EvalOptions) -> Result<f64> {
    if (x - 1.0).abs() < RESIDUE_LIMIT_GUARD {
        return Ok(0.0);
    }
    Ok((zeta_real(x, eval)? * (x - 1.0)).ln())
}

fn check_rho(rho: f64) -> Result<()> {
    if !(rho.is_finite() && rho > 0.5) {
        return Err(Error::OutOfDomain(format!("rho must exceed 1/2, got {rho}")));
    }
    Ok(())
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha.is_finite() && alpha > 0.0) {
        return Err(Error::OutOfDomain(format!("alpha must be positive, got {alpha}")));
    }
    let distance = (alpha - 0.5).abs();
    if distance < BOUNDARY_GUARD {
        return Err(Error::DivergentAtBoundary { distance });
    }
    Ok(())
}

/// `ln( zeta(rho + rho0) (rho + rho0 - 1) / (|1 - rho| + rho0) )`.
pub fn phi_closed(rho: f64, rho0: f64, eval: &EvalOptions) -> Result<f64> {
    check_rho(rho)?;
    LorentzMeasure::new(rho0)?;
    Ok(ln_regularized_zeta(rho + rho0, eval)? - ((1.0 - rho).abs() + rho0).ln())
}

/// `ln( zeta(rho + rho0) (rho + rho0 - 1) )` for a general scale `rho0`.
pub fn phi1_closed_general(rho: f64, rho0: f64, eval: &EvalOptions) -> Result<f64> {
    check_rho(rho)?;
    LorentzMeasure::new(rho0)?;
    ln_regularized_zeta(rho + rho0, eval)
}

/// Derivative of [`phi1_closed_general`] in `rho0` at fixed `rho`:
/// `zeta'/zeta(rho + rho0) + 1 / (rho + rho0 - 1)`.
pub fn phi1_rho0_derivative(rho: f64, rho0: f64, eval: &EvalOptions) -> Result<f64> {
    check_rho(rho)?;
    LorentzMeasure::new(rho0)?;
    let x = rho + rho0;
    if (x - 1.0).abs() < RESIDUE_LIMIT_GUARD {
        return Ok(EULER_GAMMA);
    }
    Ok(log_derivative_real(x, eval)? + 1.0 / (x - 1.0))
}

/// Two-branch closed form of `phi1(alpha)`: 0 inside the strip,
/// `ln(zeta(2 alpha)(2 alpha - 1))` outside.
pub fn phi1_closed(alpha: f64, eval: &EvalOptions) -> Result<f64> {
    check_alpha(alpha)?;
    if alpha < 0.5 {
        Ok(0.0)
    } else {
        ln_regularized_zeta(2.0 * alpha, eval)
    }
}

/// Two-branch closed form of `phi2(alpha)`.
pub fn phi2_closed(alpha: f64, eval: &EvalOptions) -> Result<f64> {
    check_alpha(alpha)?;
    if alpha < 0.5 {
        return Ok(-EULER_GAMMA / (2.0 * (0.5 - alpha)));
    }
    let x = 2.0 * alpha;
    let d = x - 1.0;
    let ln_reg = ln_regularized_zeta(x, eval)?;
    Ok(-(log_derivative_real(x, eval)? + 1.0 / d) / d + ln_reg / (2.0 * (alpha - 0.5).powi(2)))
}

/// Closed form of the `rho0 = rho` potential: `ln(zeta(2 rho)(2 rho - 1))`
/// for `1/2 < rho < 1`, `ln zeta(2 rho)` for `rho > 1`. The branches meet
/// at `rho = 1`, which is accepted.
pub fn remark_closed(rho: f64, eval: &EvalOptions) -> Result<f64> {
    check_rho(rho)?;
    let z = zeta_real(2.0 * rho, eval)?;
    if rho < 1.0 {
        Ok((z * (2.0 * rho - 1.0)).ln())
    } else {
        Ok(z.ln())
    }
}

fn scale_for(alpha: f64) -> (f64, f64) {
    (0.5 + alpha, (0.5 - alpha).abs())
}

/// The product integrand `ln|zeta(rho + i t) (|1 - rho| + i t)|` on the
/// line `rho`, as used by `phi1` and `phi2`.
///
/// The two factors are integrated separately. `ln|zeta|` is bounded on the
/// line and gets the sampled tail bound; `ln|1 - rho + i t|` grows like
/// `ln t`, so a bound sampled on `[T, 2T]` would undercount its tail, and it
/// is integrated over the whole line instead.
fn product_potential(alpha: f64, kernel: Kernel, opts: &LineOptions) -> Result<(f64, f64, QuadratureResult)> {
    let (rho, rho0) = scale_for(alpha);
    let measure = LorentzMeasure::new(rho0)?;
    let line = zeta_line(rho, opts.t_max, opts)?;
    let zeta_part = integrate_weighted(&|t| line.ln_abs(t), &measure, kernel, &[], opts, TailPolicy::Estimate)?;
    let offset = (1.0 - rho).abs();
    let log_opts = LineOptions {
        zeros: None,
        ..opts.clone()
    };
    let log_part = integrate_weighted(
        &|t| 0.5 * (offset * offset + t * t).ln(),
        &measure,
        kernel,
        &[offset, 4.0 * offset],
        &log_opts,
        TailPolicy::Mapped,
    )?;
    let q = QuadratureResult {
        value: zeta_part.value + log_part.value,
        error_estimate: zeta_part.error_estimate + log_part.error_estimate,
        panels: zeta_part.panels + log_part.panels,
        truncation_t: zeta_part.truncation_t,
        tail_estimate: zeta_part.tail_estimate + log_part.tail_estimate,
    };
    Ok((rho, rho0, q))
}

/// `phi(rho, rho0)`: Lorentz mean of `ln|zeta|` on the line `rho`.
pub fn phi_report(rho: f64, rho0: f64, opts: &LineOptions) -> Result<PotentialReport> {
    let closed = phi_closed(rho, rho0, &opts.eval)?;
    let measure = LorentzMeasure::new(rho0)?;
    let q = integrate_lorentz(rho, &measure, Kernel::Lorentz, opts)?;
    Ok(PotentialReport::new(PotentialKind::Phi, rho, rho0, closed, q))
}

pub fn phi1_report(alpha: f64, opts: &LineOptions) -> Result<PotentialReport> {
    let closed = phi1_closed(alpha, &opts.eval)?;
    let (rho, rho0, q) = product_potential(alpha, Kernel::Lorentz, opts)?;
    Ok(PotentialReport::new(PotentialKind::Phi1, rho, rho0, closed, q))
}

/// `phi2(alpha)`; the numeric side keeps the `rho0 / pi` prefactor with the
/// squared kernel.
pub fn phi2_report(alpha: f64, opts: &LineOptions) -> Result<PotentialReport> {
    let closed = phi2_closed(alpha, &opts.eval)?;
    let (rho, rho0, q) = product_potential(alpha, Kernel::LorentzSquared, opts)?;
    Ok(PotentialReport::new(PotentialKind::Phi2, rho, rho0, closed, q))
}

/// Potential with `rho0 = rho`.
pub fn remark_potential(rho: f64, opts: &LineOptions) -> Result<PotentialReport> {
    let closed = remark_closed(rho, &opts.eval)?;
    let q = integrate_lorentz(rho, &LorentzMeasure::new(rho)?, Kernel::Lorentz, opts)?;
    Ok(PotentialReport::new(PotentialKind::Remark, rho, rho, closed, q))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldVariant {
    /// `d phi / d alpha`.
    DAlpha,
    /// `d phi / d rho` at fixed `rho0`.
    DRho,
}

impl std::str::FromStr for FieldVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "d_alpha" => Ok(FieldVariant::DAlpha),
            "d_rho" => Ok(FieldVariant::DRho),
            other => Err(Error::Usage(format!("unknown field variant {other:?}; expected d_alpha or d_rho"))),
        }
    }
}

/// Electric field of the potential `phi(alpha)`.
///
/// `d_alpha`: `2 / (1 - 2 alpha)` inside, `2 zeta'/zeta(2 alpha)` outside.
/// `d_rho`: `gamma + 1 / (1 - 2 alpha)` inside, `zeta'/zeta(2 alpha)` outside.
pub fn electric_field(alpha: f64, variant: FieldVariant, eval: &EvalOptions) -> Result<f64> {
    check_alpha(alpha)?;
    let inside = alpha < 0.5;
    Ok(match (variant, inside) {
        (FieldVariant::DAlpha, true) => 2.0 / (1.0 - 2.0 * alpha),
        (FieldVariant::DAlpha, false) => 2.0 * log_derivative_real(2.0 * alpha, eval)?,
        (FieldVariant::DRho, true) => EULER_GAMMA + 1.0 / (1.0 - 2.0 * alpha),
        (FieldVariant::DRho, false) => log_derivative_real(2.0 * alpha, eval)?,
    })
}
