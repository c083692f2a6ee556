//! Acceptance criteria 1 to 9, one PASS/FAIL line each. Runs with a plain
//! `main` so every line is printed whether or not the criterion holds.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::Instant;

use lorentz_zeta::arith::inverse_zeta_partials;
use lorentz_zeta::experiment::{identity_pairs, run_experiment, ExperimentConfig, ExperimentReport, SUITE_SEED};
use lorentz_zeta::potentials::{phi1_report, remark_potential};
use lorentz_zeta::quadrature::{
    integrate_lorentz, log_linear_identity, Execution, Kernel, LineOptions, LorentzMeasure, QuadratureResult,
    DEFAULT_THETA_MAX,
};
use lorentz_zeta::symmetry::{sweep_symmetry, SweepRecord, DEFAULT_SOLVER_TOL};
use lorentz_zeta::zeta::{zeta, ComplexValue, EvalOptions};
use lorentz_zeta::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SWEEP_GRID: [f64; 4] = [0.1, 0.2, 0.3, 0.4];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome {
        pass,
        detail: detail.into(),
    })
}

fn experiment(execution: Execution) -> Result<ExperimentReport> {
    run_experiment(&ExperimentConfig {
        execution,
        ..ExperimentConfig::default()
    })
}

fn sweep(execution: Execution) -> Vec<SweepRecord> {
    let opts = LineOptions {
        execution,
        ..LineOptions::default()
    };
    sweep_symmetry(&SWEEP_GRID, DEFAULT_THETA_MAX, DEFAULT_SOLVER_TOL, &opts)
}

fn strip_reproduction() -> Result<Outcome> {
    let start = Instant::now();
    let report = experiment(Execution::Serial)?;
    let elapsed = start.elapsed().as_secs_f64();
    let worst = report
        .comparisons
        .iter()
        .map(|c| format!("{} {:.3e}/{:.0e}", c.name, c.deviation(), c.allowed))
        .collect::<Vec<_>>()
        .join(", ");
    outcome(report.all_pass() && elapsed < 120.0, format!("{worst}; {elapsed:.2}s"))
}

fn quadrature_oracle() -> Result<Outcome> {
    let mut worst_ratio = 0.0f64;
    let mut worst_abs = 0.0f64;
    let mut pass = true;
    for (rho, rho0) in identity_pairs(SUITE_SEED, 20) {
        let c = log_linear_identity(rho, rho0, 1000.0, 1e-10)?;
        let r = c.residual.abs();
        pass &= r <= c.quadrature.total_error() && r <= 1e-8;
        worst_abs = worst_abs.max(r);
        worst_ratio = worst_ratio.max(r / c.quadrature.total_error());
    }
    outcome(pass, format!("max |residual| {worst_abs:.2e}, max residual/budget {worst_ratio:.2e}"))
}

fn unconditional_region() -> Result<Outcome> {
    let mut pass = true;
    let mut parts = Vec::new();
    for rho in [1.1, 1.5, 2.0] {
        let rep = remark_potential(rho, &LineOptions::default())?;
        let r = rep.residual.abs();
        pass &= r <= rep.total_error() && r <= 1e-5;
        parts.push(format!("rho {rho}: {r:.2e} <= {:.2e}", rep.total_error()));
    }
    outcome(pass, parts.join(", "))
}

fn phi1_budget() -> Result<Outcome> {
    let mut pass = true;
    let mut worst = 0.0f64;
    for alpha in [0.1, 0.2, 0.3, 0.4, 0.75, 1.0, 1.5] {
        let rep = phi1_report(alpha, &LineOptions::default())?;
        pass &= rep.within_budget();
        worst = worst.max(rep.residual.abs() / rep.total_error());
    }
    outcome(pass, format!("max residual/budget {worst:.2e} over 7 points"))
}

fn critical_line_limit() -> Result<Outcome> {
    let q: QuadratureResult = integrate_lorentz(0.5 + 1e-4, &LorentzMeasure::new(0.5)?, Kernel::Lorentz, &LineOptions::default())?;
    outcome(
        q.value.abs() <= 0.02,
        format!("value {:.3e}, tail estimate {:.2e}, {} panels", q.value, q.tail_estimate, q.panels),
    )
}

fn symmetry_sweep() -> Result<Outcome> {
    let mut pass = true;
    let mut parts = Vec::new();
    for point in sweep(Execution::Serial) {
        let c = point.outcome?;
        pass &= c.residual.within_budget();
        parts.push(format!("{}: {:.2e}", point.alpha, c.residual.difference.abs()));
    }
    outcome(pass, format!("|inside - outside| {}", parts.join(", ")))
}

fn inverse_methods() -> Result<Outcome> {
    let p = inverse_zeta_partials(1.47446, 1_000_000, 1_000_000)?;
    let euler = (p.euler_product - p.direct).abs();
    let mobius = (p.mobius_sum - p.direct).abs();
    let pass = euler <= p.euler_tail_bound
        && mobius <= p.mobius_tail_bound
        && p.euler_tail_bound <= 5e-3
        && p.mobius_tail_bound <= 5e-3
        && (p.direct - 0.36788).abs() < 1e-5;
    outcome(
        pass,
        format!(
            "direct {:.8}; euler off by {euler:.2e}, mobius off by {mobius:.2e}; bounds {:.2e}",
            p.direct, p.euler_tail_bound
        ),
    )
}

fn zeta_regression() -> Result<Outcome> {
    let opts = EvalOptions::default();
    let real = |x: f64| zeta(ComplexValue::new(x, 0.0), &opts).map(|z| z.re);
    let e2 = (real(2.0)? - PI * PI / 6.0).abs();
    let e4 = (real(4.0)? - PI.powi(4) / 90.0).abs();
    let zero = zeta(ComplexValue::new(0.5, 14.134725), &opts)?.norm();
    let mut rng = ChaCha8Rng::seed_from_u64(SUITE_SEED);
    let mut conj = 0.0f64;
    for _ in 0..20 {
        let s = ComplexValue::new(rng.gen_range(0.05..3.0), rng.gen_range(-100.0..100.0));
        conj = conj.max((zeta(s, &opts)?.conj() - zeta(s.conj(), &opts)?).norm());
    }
    outcome(
        e2 <= 1e-12 && e4 <= 1e-12 && zero <= 1e-5 && conj <= 1e-14,
        format!("zeta(2) {e2:.1e}, zeta(4) {e4:.1e}, |zeta(first zero)| {zero:.1e}, conjugation {conj:.1e}"),
    )
}

fn quadrature_values(q: &QuadratureResult) -> [f64; 4] {
    [q.value, q.error_estimate, q.tail_estimate, q.truncation_t]
}

fn determinism() -> Result<Outcome> {
    let mut worst = 0.0f64;
    let mut compare = |a: &[f64], b: &[f64]| {
        for (x, y) in a.iter().zip(b) {
            worst = worst.max((x - y).abs());
        }
    };
    let (s, p) = (experiment(Execution::Serial)?, experiment(Execution::Parallel)?);
    compare(&[s.pair.alpha_prime, s.height, s.residual.difference], &[p.pair.alpha_prime, p.height, p.residual.difference]);
    compare(&quadrature_values(&s.residual.inside), &quadrature_values(&p.residual.inside));
    compare(&quadrature_values(&s.residual.outside), &quadrature_values(&p.residual.outside));
    for (a, b) in sweep(Execution::Serial).into_iter().zip(sweep(Execution::Parallel)) {
        let (a, b) = (a.outcome?, b.outcome?);
        compare(&[a.pair.alpha_prime, a.residual.difference], &[b.pair.alpha_prime, b.residual.difference]);
        compare(&quadrature_values(&a.residual.inside), &quadrature_values(&b.residual.inside));
        compare(&quadrature_values(&a.residual.outside), &quadrature_values(&b.residual.outside));
    }
    outcome(worst <= 1e-13, format!("max serial/parallel difference {worst:.1e}"))
}

type Criterion = fn() -> Result<Outcome>;

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 9] = [
        ("strip experiment reproduction", strip_reproduction),
        ("log identity quadrature oracle", quadrature_oracle),
        ("potential right of the strip", unconditional_region),
        ("phi1 within quadrature budget", phi1_budget),
        ("critical-line limit", critical_line_limit),
        ("symmetry sweep", symmetry_sweep),
        ("inverse zeta method agreement", inverse_methods),
        ("zeta engine regression", zeta_regression),
        ("serial/parallel determinism", determinism),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let (pass, detail) = match check() {
            Ok(o) => (o.pass, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        if !pass {
            failures += 1;
        }
        println!("criterion {} {} {name}: {detail}", i + 1, if pass { "PASS" } else { "FAIL" });
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
