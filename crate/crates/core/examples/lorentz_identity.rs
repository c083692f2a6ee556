//! The Lorentz measure and the zeta-free log identity that validates the
//! line quadrature, followed by a zeta potential in the half-plane
//! `Re s > 1` where its closed form needs no hypothesis.

use lorentz_zeta::potentials::remark_potential;
use lorentz_zeta::quadrature::{integrate_weighted, log_linear_identity, Kernel, LineOptions, LorentzMeasure, TailPolicy};
use lorentz_zeta::Result;

pub fn run_example() -> Result<()> {
    let opts = LineOptions {
        zeros: None,
        ..LineOptions::default()
    };
    let measure = LorentzMeasure::new(0.25)?;
    let mass = integrate_weighted(&|_| 1.0, &measure, Kernel::Lorentz, &[], &opts, TailPolicy::Mapped)?;
    println!("total mass of the measure with rho0 = 0.25: {:.14}", mass.value);

    for (rho, rho0) in [(2.0, 1.0), (0.5, 0.5), (1.5, 0.25), (0.7, 0.9)] {
        let check = log_linear_identity(rho, rho0, 1000.0, 1e-10)?;
        println!(
            "identity rho = {rho}, rho0 = {rho0}: numeric {:.12} closed {:.12} residual {:.1e} (budget {:.1e})",
            check.numeric,
            check.closed,
            check.residual,
            check.quadrature.total_error()
        );
    }

    let report = remark_potential(1.5, &LineOptions::default())?;
    println!(
        "potential at rho = rho0 = 1.5: numeric {:.8}, ln zeta(3) = {:.8}, residual {:.1e} within {:.1e}",
        report.numeric,
        report.closed,
        report.residual,
        report.total_error()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
