//! Lorentz-weighted integrals along vertical lines.

use std::f64::consts::{FRAC_PI_2, PI};

use super::adaptive::{integrate_adaptive, AdaptiveOptions, Execution};
use super::zeros::ZeroOrdinates;
use crate::error::{Error, Result};
use crate::zeta::{EvalOptions, ZetaLine};

/// Number of samples on `[T, 2T]` used to bound the discarded tail.
pub const TAIL_SAMPLES: usize = 64;

/// Default theta cut, `0.999 pi / 2`.
pub const DEFAULT_THETA_MAX: f64 = 0.999 * FRAC_PI_2;

/// Normalized Cauchy weight `(rho0 / pi) / (rho0^2 + t^2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LorentzMeasure {
    rho0: f64,
}

impl LorentzMeasure {
    pub fn new(rho0: f64) -> Result<Self> {
        if !(rho0.is_finite() && rho0 > 0.0) {
            return Err(Error::OutOfDomain(format!("rho0 must be positive, got {rho0}")));
        }
        Ok(Self { rho0 })
    }

    pub fn rho0(&self) -> f64 {
        self.rho0
    }

    /// Normalization constant `C = rho0 / pi`.
    pub fn normalization(&self) -> f64 {
        self.rho0 / PI
    }

    pub fn density(&self, t: f64) -> f64 {
        self.weight(Kernel::Lorentz, t)
    }

    /// `C / (rho0^2 + t^2)^p` for the chosen kernel power `p`.
    pub fn weight(&self, kernel: Kernel, t: f64) -> f64 {
        let q = self.rho0 * self.rho0 + t * t;
        match kernel {
            Kernel::Lorentz => self.normalization() / q,
            Kernel::LorentzSquared => self.normalization() / (q * q),
        }
    }
}

/// Power of the Lorentz kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kernel {
    /// `1 / (rho0^2 + t^2)`
    Lorentz,
    /// `1 / (rho0^2 + t^2)^2`
    LorentzSquared,
}

impl Kernel {
    pub fn from_power(power: u32) -> Result<Self> {
        match power {
            1 => Ok(Kernel::Lorentz),
            2 => Ok(Kernel::LorentzSquared),
            p => Err(Error::OutOfDomain(format!("kernel power must be 1 or 2, got {p}"))),
        }
    }

    pub fn power(self) -> u32 {
        match self {
            Kernel::Lorentz => 1,
            Kernel::LorentzSquared => 2,
        }
    }
}

/// Outcome of one weighted line integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    /// Integral over the covered range (the tail is not added unless it was
    /// integrated exactly, see [`TailPolicy::Mapped`]).
    pub value: f64,
    /// Quadrature error estimate over the covered range.
    pub error_estimate: f64,
    pub panels: usize,
    /// Height `T` where the t-integral stops (theta cut mapped to `t`).
    pub truncation_t: f64,
    /// Bound on what lies beyond `T`.
    pub tail_estimate: f64,
}

impl QuadratureResult {
    pub fn total_error(&self) -> f64 {
        self.error_estimate + self.tail_estimate
    }

    pub fn tail_corrected_bounds(&self) -> (f64, f64) {
        (self.value - self.total_error(), self.value + self.total_error())
    }
}

/// What happens beyond the truncation height.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TailPolicy {
    /// Bound `|f| <= M` from samples on `[T, 2T]` and report the kernel tail
    /// mass times `M`. Needed whenever `f` involves zeta at great heights.
    Estimate,
    /// Integrate `[T, inf)` through `t = T / u`; only for integrands cheap to
    /// evaluate at arbitrary heights.
    Mapped,
}

/// Options shared by the line integrators.
#[derive(Debug, Clone, PartialEq)]
pub struct LineOptions {
    /// Truncation height `T` of t-line integrals.
    pub t_max: f64,
    /// Absolute tolerance on the covered range.
    pub tol: f64,
    pub max_panels: usize,
    pub execution: Execution,
    /// Width of the initial uniform partition in `t`.
    pub panel_width: f64,
    /// Zero ordinates at which panels are pre-split.
    pub zeros: Option<ZeroOrdinates>,
    pub eval: EvalOptions,
}

impl Default for LineOptions {
    fn default() -> Self {
        Self {
            t_max: 1000.0,
            tol: 1e-10,
            max_panels: 200_000,
            execution: Execution::Serial,
            panel_width: 4.0,
            zeros: Some(ZeroOrdinates::default()),
            eval: EvalOptions::default(),
        }
    }
}

impl LineOptions {
    fn adaptive(&self) -> AdaptiveOptions {
        AdaptiveOptions {
            tol: self.tol,
            max_panels: self.max_panels,
            execution: self.execution,
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.t_max.is_finite() && self.t_max > 0.0) {
            return Err(Error::OutOfDomain(format!("t_max must be positive, got {}", self.t_max)));
        }
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return Err(Error::OutOfDomain(format!("tol must be positive, got {}", self.tol)));
        }
        if !(self.panel_width.is_finite() && self.panel_width > 0.0) {
            return Err(Error::OutOfDomain("panel_width must be positive".into()));
        }
        self.eval.validate()
    }

    /// Evaluation options for a zeta line that must also serve the tail
    /// sampler up to `2 T`.
    fn line_eval(&self, height: f64) -> EvalOptions {
        let needed = (0.9 * 2.0 * height + 64.0) as usize;
        EvalOptions {
            max_terms: self.eval.max_terms.max(needed),
            ..self.eval
        }
    }

    /// Initial partition of `[0, t_max]`: uniform cells, the kernel scale,
    /// zero ordinates and any caller-provided points.
    fn t_partition(&self, t_max: f64, scale: f64, extra: &[f64]) -> Vec<f64> {
        let cells = (t_max / self.panel_width).ceil().max(1.0) as usize;
        let mut points: Vec<f64> = (0..=cells).map(|i| t_max * i as f64 / cells as f64).collect();
        points.push(scale);
        points.extend_from_slice(extra);
        if let Some(zeros) = &self.zeros {
            points.extend(zeros.up_to(t_max));
        }
        points.retain(|&t| (0.0..=t_max).contains(&t));
        points.sort_by(f64::total_cmp);
        points.dedup();
        points
    }
}

fn sampled_bound<F: Fn(f64) -> f64>(f: &F, t_max: f64) -> Result<f64> {
    let mut bound = 0.0f64;
    for i in 0..TAIL_SAMPLES {
        let t = t_max * (1.0 + i as f64 / (TAIL_SAMPLES - 1) as f64);
        let v = f(t);
        if !v.is_finite() {
            return Err(Error::OutOfDomain(format!("integrand not finite at tail sample t = {t}")));
        }
        bound = bound.max(v.abs());
    }
    Ok(bound)
}

/// `2 C int_0^T f(t) / (rho0^2 + t^2)^p dt`, the symmetric integral over
/// `[-T, T]` of an even integrand `f`, plus the tail treatment.
pub fn integrate_weighted<F>(
    f: &F,
    measure: &LorentzMeasure,
    kernel: Kernel,
    extra_breakpoints: &[f64],
    opts: &LineOptions,
    tail: TailPolicy,
) -> Result<QuadratureResult>
where
    F: Fn(f64) -> f64 + Sync,
{
    opts.validate()?;
    let t_max = opts.t_max;
    let rho0 = measure.rho0();
    let c2 = 2.0 * measure.normalization();
    let body = {
        let g = |t: f64| 2.0 * measure.weight(kernel, t) * f(t);
        integrate_adaptive(&g, &opts.t_partition(t_max, rho0, extra_breakpoints), &opts.adaptive())?
    };
    let mut result = QuadratureResult {
        value: body.value,
        error_estimate: body.error,
        panels: body.panels,
        truncation_t: t_max,
        tail_estimate: 0.0,
    };
    match tail {
        TailPolicy::Estimate => {
            let m = sampled_bound(f, t_max)?;
            result.tail_estimate = match kernel {
                Kernel::Lorentz => c2 * m / t_max,
                Kernel::LorentzSquared => c2 * m / (3.0 * t_max.powi(3)),
            };
        }
        TailPolicy::Mapped => {
            let r2 = rho0 * rho0;
            let h = |u: f64| {
                let t = t_max / u;
                let q = r2 * u * u + t_max * t_max;
                match kernel {
                    Kernel::Lorentz => c2 * f(t) * t_max / q,
                    Kernel::LorentzSquared => c2 * f(t) * t_max * u * u / (q * q),
                }
            };
            let mapped = integrate_adaptive(&h, &[0.0, 0.25, 0.5, 1.0], &opts.adaptive())?;
            result.value += mapped.value;
            result.panels += mapped.panels;
            result.tail_estimate = mapped.error;
        }
    }
    Ok(result)
}

fn check_rho(rho: f64) -> Result<()> {
    if !(rho.is_finite() && rho > 0.5) {
        return Err(Error::OutOfDomain(format!("rho must exceed 1/2, got {rho}")));
    }
    Ok(())
}

/// Zeta line for abscissa `rho` valid up to height `t_max`.
pub fn zeta_line(rho: f64, t_max: f64, opts: &LineOptions) -> Result<ZetaLine> {
    ZetaLine::new(rho, t_max, &opts.line_eval(t_max))
}

/// `C int ln|zeta(rho + i t)| / (rho0^2 + t^2)^p dt` over `[-T, T]`.
pub fn integrate_lorentz(
    rho: f64,
    measure: &LorentzMeasure,
    kernel: Kernel,
    opts: &LineOptions,
) -> Result<QuadratureResult> {
    check_rho(rho)?;
    opts.validate()?;
    let line = zeta_line(rho, opts.t_max, opts)?;
    integrate_weighted(&|t| line.ln_abs(t), measure, kernel, &[], opts, TailPolicy::Estimate)
}

/// `(2 / pi) int_0^theta_max ln|zeta(rho + i rho0 tan theta)| d theta`.
///
/// `opts.t_max` is ignored; the truncation height is `rho0 tan(theta_max)`.
pub fn integrate_theta_form(rho: f64, rho0: f64, theta_max: f64, opts: &LineOptions) -> Result<QuadratureResult> {
    check_rho(rho)?;
    LorentzMeasure::new(rho0)?;
    if !(theta_max > 0.0 && theta_max < FRAC_PI_2) {
        return Err(Error::OutOfDomain(format!("theta_max must lie in (0, pi/2), got {theta_max}")));
    }
    let height = rho0 * theta_max.tan();
    let probe = LineOptions {
        t_max: height,
        ..opts.clone()
    };
    probe.validate()?;
    let line = zeta_line(rho, height, opts)?;
    let f = |theta: f64| (2.0 / PI) * line.ln_abs(rho0 * theta.tan());
    let mut breakpoints: Vec<f64> = probe
        .t_partition(height, rho0, &[])
        .into_iter()
        .map(|t| (t / rho0).atan().min(theta_max))
        .collect();
    breakpoints.push(theta_max);
    breakpoints.sort_by(f64::total_cmp);
    breakpoints.dedup();
    let body = integrate_adaptive(&f, &breakpoints, &opts.adaptive())?;
    let m = sampled_bound(&|t| line.ln_abs(t), height)?;
    Ok(QuadratureResult {
        value: body.value,
        error_estimate: body.error,
        panels: body.panels,
        truncation_t: height,
        tail_estimate: (2.0 / PI) * (FRAC_PI_2 - theta_max) * m,
    })
}

/// Numeric and closed-form sides of
/// `C int ln|1 - rho + i t| / (rho0^2 + t^2) dt = ln(|1 - rho| + rho0)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentityCheck {
    pub numeric: f64,
    pub closed: f64,
    pub residual: f64,
    pub quadrature: QuadratureResult,
}

/// Zeta-free check of the line quadrature. The integrand is elementary, so
/// the range beyond `t_max` is integrated too rather than estimated.
pub fn log_linear_identity(rho: f64, rho0: f64, t_max: f64, tol: f64) -> Result<IdentityCheck> {
    if !rho.is_finite() {
        return Err(Error::OutOfDomain(format!("rho must be finite, got {rho}")));
    }
    let measure = LorentzMeasure::new(rho0)?;
    let offset = (1.0 - rho).abs();
    let opts = LineOptions {
        t_max,
        tol,
        zeros: None,
        ..LineOptions::default()
    };
    let f = |t: f64| 0.5 * (offset * offset + t * t).ln();
    let extra: Vec<f64> = [offset, 4.0 * offset].into_iter().filter(|&x| x > 0.0).collect();
    let quadrature = integrate_weighted(&f, &measure, Kernel::Lorentz, &extra, &opts, TailPolicy::Mapped)?;
    let closed = (offset + rho0).ln();
    Ok(IdentityCheck {
        numeric: quadrature.value,
        closed,
        residual: quadrature.value - closed,
        quadrature,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_closed_forms() {
        let check = log_linear_identity(2.0, 1.0, 1000.0, 1e-10).unwrap();
        assert!((check.closed - 2f64.ln()).abs() < 1e-15);
        assert!(check.residual.abs() < 1e-9);
        let check = log_linear_identity(0.5, 0.5, 1000.0, 1e-10).unwrap();
        assert_eq!(check.closed, 0.0);
        assert!(check.residual.abs() < 1e-9);
        let check = log_linear_identity(1.5, 0.25, 1000.0, 1e-10).unwrap();
        assert!((check.closed - 0.75f64.ln()).abs() < 1e-15);
        assert!(check.residual.abs() < 1e-9);
    }

    #[test]
    fn identity_at_rho_one_has_log_singularity() {
        let check = log_linear_identity(1.0, 0.3, 1000.0, 1e-10).unwrap();
        assert!(check.residual.abs() <= check.quadrature.total_error());
    }

    #[test]
    fn measure_normalizes_to_one() {
        for rho0 in [0.1, 0.25, 0.5, 1.0] {
            let m = LorentzMeasure::new(rho0).unwrap();
            let opts = LineOptions {
                zeros: None,
                ..LineOptions::default()
            };
            let r = integrate_weighted(&|_| 1.0, &m, Kernel::Lorentz, &[], &opts, TailPolicy::Mapped).unwrap();
            assert!((r.value - 1.0).abs() <= 1e-10, "rho0 = {rho0}: {}", r.value);
        }
    }

    #[test]
    fn estimated_tail_covers_constant_integrand() {
        let m = LorentzMeasure::new(0.5).unwrap();
        let opts = LineOptions {
            zeros: None,
            ..LineOptions::default()
        };
        let r = integrate_weighted(&|_| 1.0, &m, Kernel::Lorentz, &[], &opts, TailPolicy::Estimate).unwrap();
        assert!((r.value - 1.0).abs() <= r.total_error());
        // exact discarded mass is 1 - (2/pi) atan(T / rho0)
        let discarded = 1.0 - (2.0 / PI) * (1000.0f64 / 0.5).atan();
        assert!((r.value - (1.0 - discarded)).abs() < 1e-10);
    }

    #[test]
    fn squared_kernel_mass() {
        // C int dt / (rho0^2 + t^2)^2 = 1 / (2 rho0^2)
        let rho0 = 0.25;
        let m = LorentzMeasure::new(rho0).unwrap();
        let opts = LineOptions {
            zeros: None,
            ..LineOptions::default()
        };
        let r = integrate_weighted(&|_| 1.0, &m, Kernel::LorentzSquared, &[], &opts, TailPolicy::Mapped).unwrap();
        assert!((r.value - 1.0 / (2.0 * rho0 * rho0)).abs() < 1e-9);
    }

    #[test]
    fn kernel_power_parsing() {
        assert_eq!(Kernel::from_power(1).unwrap(), Kernel::Lorentz);
        assert_eq!(Kernel::from_power(2).unwrap().power(), 2);
        assert!(Kernel::from_power(3).is_err());
    }

    #[test]
    fn domain_errors() {
        let m = LorentzMeasure::new(0.5).unwrap();
        let opts = LineOptions::default();
        assert!(LorentzMeasure::new(0.0).is_err());
        assert!(integrate_lorentz(0.5, &m, Kernel::Lorentz, &opts).is_err());
        assert!(integrate_theta_form(0.8, 0.2, FRAC_PI_2, &opts).is_err());
        assert!(integrate_theta_form(0.8, 0.2, 0.0, &opts).is_err());
        assert!(log_linear_identity(0.8, -1.0, 100.0, 1e-8).is_err());
    }

    #[test]
    fn theta_form_vanishes_on_tiny_interval() {
        let r = integrate_theta_form(0.8, 0.2, 1e-9, &LineOptions::default()).unwrap();
        assert!(r.value.abs() < 1e-8);
        assert!(r.truncation_t < 1e-9);
    }

    #[test]
    fn unconditional_line_matches_remark_value() {
        // rho = rho0 = 1.5: the full integral equals ln zeta(3).
        let m = LorentzMeasure::new(1.5).unwrap();
        let r = integrate_lorentz(1.5, &m, Kernel::Lorentz, &LineOptions::default()).unwrap();
        let ln_zeta3 = 0.184_034_175_391_491_42;
        assert!((r.value - ln_zeta3).abs() <= r.total_error());
        assert!((r.value - ln_zeta3).abs() < 1e-5);
    }
}
