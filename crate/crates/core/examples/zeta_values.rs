//! Zeta, `ln|zeta|` and `zeta'/zeta` at a few points, and a cached line.

use lorentz_zeta::zeta::{log_abs_zeta, zeta, zeta_log_derivative, ComplexValue, EvalOptions, ZetaLine};
use lorentz_zeta::Result;

pub fn run_example() -> Result<()> {
    let opts = EvalOptions::default();
    for s in [
        ComplexValue::new(2.0, 0.0),
        ComplexValue::new(0.5, 14.134725),
        ComplexValue::new(0.8, 30.0),
        ComplexValue::new(1.3, -120.0),
    ] {
        let z = zeta(s, &opts)?;
        println!("zeta({s}) = {z:.12}");
        if z.norm() > 1e-6 {
            println!("  ln|zeta| = {:.12}", log_abs_zeta(s, &opts)?);
            println!("  zeta'/zeta = {:.12}", zeta_log_derivative(s, &opts)?);
        }
    }

    // One line, many heights: coefficients are built once.
    let line = ZetaLine::new(0.81606, 200.0, &opts)?;
    println!("line sigma = {} uses {} terms", line.sigma(), line.terms());
    for t in [0.0, 14.13, 50.0, 199.0] {
        println!("  ln|zeta(sigma + {t} i)| = {:.10}", line.ln_abs(t));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
