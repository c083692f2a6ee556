//! Numeric against closed-form potentials on both sides of the strip
//! boundary, and the two electric-field definitions.

use lorentz_zeta::potentials::{electric_field, phi1_report, phi2_report, FieldVariant};
use lorentz_zeta::quadrature::LineOptions;
use lorentz_zeta::zeta::EvalOptions;
use lorentz_zeta::Result;

pub fn run_example() -> Result<()> {
    let opts = LineOptions::default();
    println!("{:>6} {:>6} {:>14} {:>14} {:>10} {:>10}", "kind", "alpha", "numeric", "closed", "residual", "budget");
    for alpha in [0.1, 0.25, 0.4, 0.75, 1.0] {
        for report in [phi1_report(alpha, &opts)?, phi2_report(alpha, &opts)?] {
            println!(
                "{:>6} {:>6} {:>14.9} {:>14.9} {:>10.1e} {:>10.1e}",
                report.kind.name(),
                alpha,
                report.numeric,
                report.closed,
                report.residual,
                report.total_error()
            );
        }
    }

    let eval = EvalOptions::default();
    for alpha in [0.25, 1.0] {
        println!(
            "field at alpha = {alpha}: d_alpha {:.10}, d_rho {:.10}",
            electric_field(alpha, FieldVariant::DAlpha, &eval)?,
            electric_field(alpha, FieldVariant::DRho, &eval)?
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
