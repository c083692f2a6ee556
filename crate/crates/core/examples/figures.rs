//! Data for the three figures written as `x,series,y` CSV files.

use lorentz_zeta::experiment::{cmd_figure, series, trapezoid_mean, FigureOptions};
use lorentz_zeta::Result;

pub fn run_example() -> Result<()> {
    let dir = std::env::temp_dir().join("lorentz-zeta-figures");
    std::fs::create_dir_all(&dir)?;
    let opts = FigureOptions {
        resolution: 256,
        ..FigureOptions::default()
    };
    for id in 1..=3 {
        let record = cmd_figure(id, &opts)?;
        let path = dir.join(format!("figure{id}.csv"));
        std::fs::write(&path, record.to_csv()?)?;
        println!("figure {id}: {} rows -> {}", record.data.len(), path.display());
    }

    let truncated = cmd_figure(2, &opts)?;
    for name in ["inside", "outside"] {
        println!("figure 2 {name}: (2/pi) * trapezoid = {:.6}", trapezoid_mean(&truncated, name));
    }
    let potentials = cmd_figure(3, &opts)?;
    let last = series(&potentials, "alpha_prime_outside").last().map(|r| (r.x, r.y));
    println!("figure 3 outside curve ends at {last:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
