//! The pair with `zeta(2 alpha') = e`: both theta-form integrals at
//! `theta_max = 0.999 pi/2`, compared with the published values.

use lorentz_zeta::experiment::{run_experiment, ExperimentConfig};
use lorentz_zeta::Result;

pub fn run_example() -> Result<()> {
    let cfg = ExperimentConfig::default();
    let report = run_experiment(&cfg)?;
    print!("{}", report.table());
    let (inside, outside) = (report.residual.inside, report.residual.outside);
    println!(
        "tail bounds beyond t = {:.2}: inside {:.2e}, outside {:.2e}",
        inside.truncation_t, inside.tail_estimate, outside.tail_estimate
    );
    println!("all comparisons within tolerance: {}", report.all_pass());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
