//! Validation suites: each check reports observed vs allowed residuals.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::potentials::{phi1_report, phi2_report, remark_potential, PotentialReport};
use crate::quadrature::{
    integrate_weighted, log_linear_identity, Kernel, LineOptions, LorentzMeasure, TailPolicy, DEFAULT_THETA_MAX,
};
use crate::symmetry::{alpha_from_alpha_prime, solve_alpha_prime, sweep_symmetry, InverseMethod, PartialLimits, DEFAULT_SOLVER_TOL};
use crate::zeta::{zeta, zeta_log_derivative, ComplexValue, EvalOptions};

use super::record::OutputRecord;

/// Seed for the random points drawn by the suites.
pub const SUITE_SEED: u64 = 0x5eed_2e7a;

pub const IDENTITY_PAIRS: usize = 20;
/// Absolute ceiling on identity residuals at default settings.
pub const IDENTITY_ABS_LIMIT: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Quadrature,
    Zeta,
    Theorem1,
    Symmetry,
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quadrature" => Ok(Suite::Quadrature),
            "zeta" => Ok(Suite::Zeta),
            "theorem1" => Ok(Suite::Theorem1),
            "symmetry" => Ok(Suite::Symmetry),
            other => Err(Error::Usage(format!(
                "unknown suite {other:?}; expected quadrature, zeta, theorem1 or symmetry"
            ))),
        }
    }
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Quadrature => "quadrature",
            Suite::Zeta => "zeta",
            Suite::Theorem1 => "theorem1",
            Suite::Symmetry => "symmetry",
        }
    }
}

/// Random `(rho, rho0)` pairs with `rho` in `[0.6, 3]` and `rho0` in `[0.1, 1]`.
pub fn identity_pairs(seed: u64, count: usize) -> Vec<(f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| (rng.gen_range(0.6..=3.0), rng.gen_range(0.1..=1.0)))
        .collect()
}

fn record_potential(record: &mut OutputRecord, label: &str, outcome: Result<PotentialReport>) {
    match outcome {
        Ok(rep) => {
            record.check(label, rep.residual.abs(), rep.total_error());
        }
        Err(e) => record.failed_check(label, &e.to_string()),
    }
}

fn quadrature_suite(record: &mut OutputRecord, opts: &LineOptions) {
    for (i, (rho, rho0)) in identity_pairs(SUITE_SEED, IDENTITY_PAIRS).into_iter().enumerate() {
        let label = format!("identity[{i}] rho={rho:.6} rho0={rho0:.6}");
        match log_linear_identity(rho, rho0, opts.t_max, opts.tol) {
            Ok(c) => {
                let observed = c.residual.abs();
                record.check(&format!("{label} vs budget"), observed, c.quadrature.total_error());
                record.check(&format!("{label} absolute"), observed, IDENTITY_ABS_LIMIT);
            }
            Err(e) => record.failed_check(&label, &e.to_string()),
        }
    }
    let plain = LineOptions {
        zeros: None,
        ..opts.clone()
    };
    for rho0 in [0.1, 0.25, 0.5, 1.0] {
        let label = format!("normalization rho0={rho0}");
        match LorentzMeasure::new(rho0)
            .and_then(|m| integrate_weighted(&|_| 1.0, &m, Kernel::Lorentz, &[], &plain, TailPolicy::Mapped))
        {
            Ok(q) => {
                record.check(&label, (q.value - 1.0).abs(), 1e-10);
            }
            Err(e) => record.failed_check(&label, &e.to_string()),
        }
    }
}

fn zeta_suite(record: &mut OutputRecord, eval: &EvalOptions) {
    let real = |x: f64| zeta(ComplexValue::new(x, 0.0), eval).map(|z| z.re);
    let cases: [(&str, Result<f64>, f64, f64); 4] = [
        ("zeta(2)", real(2.0), PI * PI / 6.0, 1e-12),
        ("zeta(4)", real(4.0), PI.powi(4) / 90.0, 1e-12),
        // 30-digit reference values
        ("zeta(3)", real(3.0), 1.202_056_903_159_594_3, 1e-12),
        (
            "zeta'/zeta(2)",
            zeta_log_derivative(ComplexValue::new(2.0, 0.0), eval).map(|z| z.re),
            -0.569_960_993_094_532_8,
            1e-11,
        ),
    ];
    for (label, value, expected, allowed) in cases {
        match value {
            Ok(v) => {
                record.check(label, (v - expected).abs(), allowed);
            }
            Err(e) => record.failed_check(label, &e.to_string()),
        }
    }
    match zeta(ComplexValue::new(0.5, 14.134725), eval) {
        Ok(z) => {
            record.check("|zeta(1/2 + 14.134725 i)|", z.norm(), 1e-5);
        }
        Err(e) => record.failed_check("first zero", &e.to_string()),
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SUITE_SEED);
    for i in 0..20 {
        let s = ComplexValue::new(rng.gen_range(0.05..3.0), rng.gen_range(-60.0..60.0));
        let label = format!("conjugation[{i}]");
        match (zeta(s, eval), zeta(s.conj(), eval)) {
            (Ok(a), Ok(b)) => {
                record.check(&label, (a.conj() - b).norm(), 1e-14);
            }
            (Err(e), _) | (_, Err(e)) => record.failed_check(&label, &e.to_string()),
        }
    }
}

fn theorem1_suite(record: &mut OutputRecord, opts: &LineOptions) {
    for alpha in [0.1, 0.2, 0.3, 0.4, 0.75, 1.0, 1.5] {
        record_potential(record, &format!("phi1 alpha={alpha}"), phi1_report(alpha, opts));
    }
    for alpha in [0.25, 1.0] {
        record_potential(record, &format!("phi2 alpha={alpha}"), phi2_report(alpha, opts));
    }
    for rho in [1.1, 1.5, 2.0] {
        record_potential(record, &format!("remark rho={rho}"), remark_potential(rho, opts));
    }
}

fn symmetry_suite(record: &mut OutputRecord, opts: &LineOptions) {
    for outcome in sweep_symmetry(&[0.1, 0.2, 0.3, 0.4], DEFAULT_THETA_MAX, DEFAULT_SOLVER_TOL, opts) {
        let label = format!("sweep alpha={}", outcome.alpha);
        match outcome.outcome {
            Ok(c) => {
                record.check(&label, c.residual.difference.abs(), c.residual.combined_error());
            }
            Err(e) => record.failed_check(&label, &e.to_string()),
        }
    }
    for k in 1..=9 {
        let alpha = 0.05 * k as f64;
        let label = format!("round trip alpha={alpha:.2}");
        let back = solve_alpha_prime(alpha, DEFAULT_SOLVER_TOL, &opts.eval).and_then(|p| {
            alpha_from_alpha_prime(p.alpha_prime, InverseMethod::Direct, PartialLimits::default())
        });
        match back {
            Ok(est) => {
                record.check(&label, (est.alpha - alpha).abs(), 10.0 * DEFAULT_SOLVER_TOL);
            }
            Err(e) => record.failed_check(&label, &e.to_string()),
        }
    }
    for alpha_prime in [0.73723, 1.0, 1.5] {
        let direct = alpha_from_alpha_prime(alpha_prime, InverseMethod::Direct, PartialLimits::default());
        for method in [InverseMethod::EulerProduct, InverseMethod::MobiusSum] {
            let label = format!("{} alpha'={alpha_prime}", method.name());
            match (&direct, alpha_from_alpha_prime(alpha_prime, method, PartialLimits::default())) {
                (Ok(d), Ok(p)) => {
                    record.check(&label, (p.alpha - d.alpha).abs(), p.tail_bound);
                }
                (Err(e), _) => record.failed_check(&label, &e.to_string()),
                (_, Err(e)) => record.failed_check(&label, &e.to_string()),
            }
        }
    }
}

/// Run one suite. Individual failures land in the record's checks; only
/// invalid options make the call itself fail.
pub fn cmd_validate(suite: Suite, opts: &LineOptions) -> Result<OutputRecord> {
    opts.eval.validate()?;
    let mut record = OutputRecord::new("validate");
    record
        .input("suite", suite.name())
        .input("seed", SUITE_SEED)
        .input("t_max", opts.t_max)
        .input("tol", opts.tol);
    match suite {
        Suite::Quadrature => quadrature_suite(&mut record, opts),
        Suite::Zeta => zeta_suite(&mut record, &opts.eval),
        Suite::Theorem1 => theorem1_suite(&mut record, opts),
        Suite::Symmetry => symmetry_suite(&mut record, opts),
    }
    Ok(record)
}
