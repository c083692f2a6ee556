//! Pairing a line inside the strip with one outside it through
//! `zeta(2 alpha') = 1 / (1 - 2 alpha)`, and comparing the two theta-form
//! integrals across a small grid.

use lorentz_zeta::quadrature::{LineOptions, DEFAULT_THETA_MAX};
use lorentz_zeta::symmetry::{solve_alpha_prime, sweep_symmetry, DEFAULT_SOLVER_TOL};
use lorentz_zeta::Result;

pub fn run_example() -> Result<()> {
    let opts = LineOptions::default();
    let pair = solve_alpha_prime(0.2, DEFAULT_SOLVER_TOL, &opts.eval)?;
    println!(
        "alpha = {} -> alpha' = {:.12}; lines rho = {:.6} and {:.6}, scale {:.6}, potential {:.10}",
        pair.alpha, pair.alpha_prime, pair.rho_inside, pair.rho_outside, pair.rho0, pair.potential
    );

    for point in sweep_symmetry(&[0.1, 0.2, 0.3, 0.4], DEFAULT_THETA_MAX, DEFAULT_SOLVER_TOL, &opts) {
        let check = point.outcome?;
        println!(
            "alpha {:.2}: inside {:.9} outside {:.9} difference {:+.2e} (combined error {:.1e})",
            point.alpha,
            check.residual.inside.value,
            check.residual.outside.value,
            check.residual.difference,
            check.residual.combined_error()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
