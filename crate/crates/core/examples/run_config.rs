//! Driving the library the way the binary does: build a run configuration,
//! execute it, and render the record as JSON and CSV.

use lorentz_zeta::experiment::{Command, OutputFormat, RunConfig};
use lorentz_zeta::Result;

pub fn run_example() -> Result<()> {
    let solve = RunConfig::new(Command::Solve).with("alpha", 0.31606);
    let record = solve.execute()?;
    println!("{}", record.render(OutputFormat::Json)?);

    let field = RunConfig::new(Command::Field).with("alpha", 1.0).with("variant", "d_rho");
    print!("{}", field.execute()?.render(OutputFormat::Csv)?);

    let bad = RunConfig::new(Command::Phi1).with("rho", 0.8);
    if let Err(e) = bad.execute() {
        println!("rejected before any numerics (exit code {}): {e}", e.exit_code());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
