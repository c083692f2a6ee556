//! The hidden-symmetry pairing `zeta(2 alpha') = 1 / (1 - 2 alpha)`.
//!
//! For `0 < alpha < 1/2` the line `1/2 + alpha` inside the strip and the
//! line `2 alpha' + alpha - 1/2` outside it carry the same potential, with
//! the common scale `rho0 = 1/2 - alpha`.

use rayon::prelude::*;

use crate::arith::inverse_zeta_partials;
use crate::error::{Error, Result};
use crate::quadrature::{integrate_theta_form, Execution, LineOptions, QuadratureResult};
use crate::zeta::{zeta, zeta_log_derivative, ComplexValue, EvalOptions};

/// Lower end of the `alpha'` bracket.
pub const ALPHA_PRIME_MIN: f64 = 0.5 + 1e-6;
/// Upper end of the `alpha'` bracket (`zeta(100) - 1 < 1e-30`).
pub const ALPHA_PRIME_CAP: f64 = 50.0;
/// Bracket width in `alpha'` at which bisection hands over to Newton.
const BISECTION_WIDTH: f64 = 1e-3;
/// Sweep points must keep this distance from 0 and 1/2.
pub const SWEEP_MARGIN: f64 = 1e-3;

pub const DEFAULT_SOLVER_TOL: f64 = 1e-10;

/// A solved pair `(alpha, alpha')` and the two lines it connects.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetryPair {
    pub alpha: f64,
    pub alpha_prime: f64,
    /// Shared potential `ln(1 / (1 - 2 alpha))`.
    pub potential: f64,
    /// `1/2 + alpha`.
    pub rho_inside: f64,
    /// `2 alpha' + alpha - 1/2`.
    pub rho_outside: f64,
    /// `1/2 - alpha`.
    pub rho0: f64,
}

impl SymmetryPair {
    pub fn new(alpha: f64, alpha_prime: f64) -> Self {
        Self {
            alpha,
            alpha_prime,
            potential: -(-2.0 * alpha).ln_1p(),
            rho_inside: 0.5 + alpha,
            rho_outside: 2.0 * alpha_prime + alpha - 0.5,
            rho0: 0.5 - alpha,
        }
    }

    /// `1 / (1 - 2 alpha)`, the value `zeta(2 alpha')` must take.
    pub fn target(&self) -> f64 {
        1.0 / (1.0 - 2.0 * self.alpha)
    }

    /// Height reached by a theta cut: `(1/2 - alpha) tan(theta_max)`.
    pub fn height(&self, theta_max: f64) -> f64 {
        self.rho0 * theta_max.tan()
    }
}

fn zeta_real(x: f64, eval: &EvalOptions) -> Result<f64> {
    Ok(zeta(ComplexValue::new(x, 0.0), eval)?.re)
}

/// Solve `zeta(2 alpha') = 1 / (1 - 2 alpha)` for the unique `alpha' > 1/2`.
///
/// `zeta` decreases from `+inf` to 1 on `(1, inf)`, so the bracket
/// `[ALPHA_PRIME_MIN, ALPHA_PRIME_CAP]` is bisected down to width `1e-3`,
/// then Newton steps with `d/dx zeta(x) = zeta(x) zeta'/zeta(x)` finish,
/// falling back to bisection whenever a step leaves the bracket. Stops once
/// `|zeta(2 alpha') - target| <= tol zeta(2 alpha')`.
pub fn solve_alpha_prime(alpha: f64, tol: f64, eval: &EvalOptions) -> Result<SymmetryPair> {
    if !(alpha.is_finite() && alpha > 0.0 && alpha < 0.5) {
        return Err(Error::OutOfDomain(format!("alpha must lie in (0, 1/2), got {alpha}")));
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::OutOfDomain(format!("solver tol must be positive, got {tol}")));
    }
    let target = 1.0 / (1.0 - 2.0 * alpha);
    if target - 1.0 <= tol {
        return Err(Error::NoBracket {
            target,
            reason: format!("target within tol of 1; alpha' would exceed the cap {ALPHA_PRIME_CAP}"),
        });
    }
    let residual = |x: f64| -> Result<f64> { Ok(zeta_real(x, eval)? - target) };
    let (mut lo, mut hi) = (2.0 * ALPHA_PRIME_MIN, 2.0 * ALPHA_PRIME_CAP);
    if residual(lo)? < 0.0 {
        return Err(Error::NoBracket {
            target,
            reason: format!("alpha too close to 1/2; zeta(2 alpha') exceeds zeta({lo})"),
        });
    }
    if residual(hi)? > 0.0 {
        return Err(Error::NoBracket {
            target,
            reason: format!("alpha' exceeds the cap {ALPHA_PRIME_CAP}"),
        });
    }
    while hi - lo > 2.0 * BISECTION_WIDTH {
        let mid = 0.5 * (lo + hi);
        if residual(mid)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut x = 0.5 * (lo + hi);
    for _ in 0..100 {
        let z = zeta_real(x, eval)?;
        let r = z - target;
        if r.abs() <= tol * z {
            return Ok(SymmetryPair::new(alpha, 0.5 * x));
        }
        if r > 0.0 {
            lo = x;
        } else {
            hi = x;
        }
        let slope = z * zeta_log_derivative(ComplexValue::new(x, 0.0), eval)?.re;
        let step = x - r / slope;
        x = if step > lo && step < hi { step } else { 0.5 * (lo + hi) };
        if hi - lo <= f64::EPSILON * x {
            break;
        }
    }
    Err(Error::NoBracket {
        target,
        reason: "root refinement stalled before reaching tolerance".into(),
    })
}

/// How `1 / zeta(2 alpha')` is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InverseMethod {
    Direct,
    EulerProduct,
    MobiusSum,
}

impl std::str::FromStr for InverseMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "direct" => Ok(InverseMethod::Direct),
            "euler_product" => Ok(InverseMethod::EulerProduct),
            "mobius_sum" => Ok(InverseMethod::MobiusSum),
            other => Err(Error::Usage(format!("unknown method {other:?}"))),
        }
    }
}

impl InverseMethod {
    pub fn name(self) -> &'static str {
        match self {
            InverseMethod::Direct => "direct",
            InverseMethod::EulerProduct => "euler_product",
            InverseMethod::MobiusSum => "mobius_sum",
        }
    }
}

/// Truncations for the partial methods.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartialLimits {
    pub prime_limit: usize,
    pub n_max: usize,
}

impl Default for PartialLimits {
    fn default() -> Self {
        Self {
            prime_limit: 1_000_000,
            n_max: 1_000_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaEstimate {
    pub alpha: f64,
    /// Bound on the truncation error of `alpha`; 0 for the direct method.
    pub tail_bound: f64,
}

/// `alpha = (1 - 1 / zeta(2 alpha')) / 2`.
pub fn alpha_from_alpha_prime(alpha_prime: f64, method: InverseMethod, limits: PartialLimits) -> Result<AlphaEstimate> {
    if !(alpha_prime.is_finite() && alpha_prime > 0.5) {
        return Err(Error::OutOfDomain(format!("alpha' must exceed 1/2, got {alpha_prime}")));
    }
    let s = 2.0 * alpha_prime;
    let (inverse, tail) = match method {
        InverseMethod::Direct => (1.0 / zeta_real(s, &EvalOptions::default())?, 0.0),
        InverseMethod::EulerProduct => {
            let p = inverse_zeta_partials(s, limits.prime_limit, 1)?;
            (p.euler_product, p.euler_tail_bound)
        }
        InverseMethod::MobiusSum => {
            let p = inverse_zeta_partials(s, 2, limits.n_max)?;
            (p.mobius_sum, p.mobius_tail_bound)
        }
    };
    Ok(AlphaEstimate {
        alpha: 0.5 * (1.0 - inverse),
        tail_bound: 0.5 * tail,
    })
}

/// The inside and outside theta-form integrals for one pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetryResidual {
    pub inside: QuadratureResult,
    pub outside: QuadratureResult,
    /// `inside - outside`.
    pub difference: f64,
}

impl SymmetryResidual {
    pub fn combined_error(&self) -> f64 {
        self.inside.total_error() + self.outside.total_error()
    }

    pub fn within_budget(&self) -> bool {
        self.difference.abs() <= self.combined_error()
    }
}

pub fn symmetry_residual(pair: &SymmetryPair, theta_max: f64, opts: &LineOptions) -> Result<SymmetryResidual> {
    let inside = integrate_theta_form(pair.rho_inside, pair.rho0, theta_max, opts)?;
    let outside = integrate_theta_form(pair.rho_outside, pair.rho0, theta_max, opts)?;
    Ok(SymmetryResidual {
        inside,
        outside,
        difference: inside.value - outside.value,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetryCheck {
    pub pair: SymmetryPair,
    pub residual: SymmetryResidual,
}

/// One grid point of a sweep; failures stay local to their point.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRecord {
    pub alpha: f64,
    pub outcome: Result<SymmetryCheck>,
}

fn sweep_point(alpha: f64, theta_max: f64, solver_tol: f64, opts: &LineOptions) -> SweepRecord {
    let outcome = (|| {
        if !(alpha > SWEEP_MARGIN && alpha < 0.5 - SWEEP_MARGIN) {
            return Err(Error::OutOfDomain(format!(
                "sweep point {alpha} is not inside ({SWEEP_MARGIN}, {})",
                0.5 - SWEEP_MARGIN
            )));
        }
        let pair = solve_alpha_prime(alpha, solver_tol, &opts.eval)?;
        let residual = symmetry_residual(&pair, theta_max, opts)?;
        Ok(SymmetryCheck { pair, residual })
    })();
    SweepRecord { alpha, outcome }
}

/// [`symmetry_residual`] at every grid point, in input order.
pub fn sweep_symmetry(alpha_grid: &[f64], theta_max: f64, solver_tol: f64, opts: &LineOptions) -> Vec<SweepRecord> {
    match opts.execution {
        Execution::Serial => alpha_grid
            .iter()
            .map(|&a| sweep_point(a, theta_max, solver_tol, opts))
            .collect(),
        Execution::Parallel => alpha_grid
            .par_iter()
            .map(|&a| sweep_point(a, theta_max, solver_tol, opts))
            .collect(),
    }
}
