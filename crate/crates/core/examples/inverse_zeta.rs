//! `1/zeta(s)` three ways: the engine, the Euler product over primes and
//! the Möbius series, with the truncation bounds of the partial forms.

use lorentz_zeta::arith::{inverse_zeta_partials, Sieve};
use lorentz_zeta::symmetry::{alpha_from_alpha_prime, InverseMethod, PartialLimits};
use lorentz_zeta::Result;

pub fn run_example() -> Result<()> {
    let sieve = Sieve::new(30)?;
    println!("primes <= 30: {:?}", sieve.primes());
    println!("mu(1..=30): {:?}", sieve.mobius_values());

    let s = 1.47446;
    let p = inverse_zeta_partials(s, 100_000, 100_000)?;
    println!("1/zeta({s}): direct {:.8}", p.direct);
    println!("  euler product {:.8} (bound {:.2e})", p.euler_product, p.euler_tail_bound);
    println!("  mobius sum    {:.8} (bound {:.2e})", p.mobius_sum, p.mobius_tail_bound);

    let limits = PartialLimits {
        prime_limit: 100_000,
        n_max: 100_000,
    };
    for method in [InverseMethod::Direct, InverseMethod::EulerProduct, InverseMethod::MobiusSum] {
        let est = alpha_from_alpha_prime(1.0, method, limits)?;
        println!("alpha(alpha' = 1) by {}: {:.10} +- {:.1e}", method.name(), est.alpha, est.tail_bound);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
