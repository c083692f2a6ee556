//! Möbius sieve and the two partial representations of `1 / zeta(s)`:
//! the Euler product over primes and the Möbius Dirichlet series.

use crate::error::{Error, Result};
use crate::zeta::{zeta, ComplexValue, EvalOptions};

/// Largest `n_max` accepted by [`mobius_sieve`] (about 50 MB of working memory).
pub const SIEVE_LIMIT: usize = 50_000_000;

/// Möbius values and primes up to a bound, from one linear sieve pass.
#[derive(Debug, Clone)]
pub struct Sieve {
    mobius: Vec<i8>,
    primes: Vec<u32>,
}

impl Sieve {
    pub fn new(n_max: usize) -> Result<Self> {
        if n_max == 0 {
            return Err(Error::OutOfDomain("sieve bound must be at least 1".into()));
        }
        if n_max > SIEVE_LIMIT {
            return Err(Error::CapacityExceeded {
                requested: n_max,
                limit: SIEVE_LIMIT,
            });
        }
        let mut mobius = vec![0i8; n_max + 1];
        let mut composite = vec![false; n_max + 1];
        let mut primes = Vec::new();
        mobius[1] = 1;
        for i in 2..=n_max {
            if !composite[i] {
                primes.push(i as u32);
                mobius[i] = -1;
            }
            for &p in &primes {
                let p = p as usize;
                let m = i * p;
                if m > n_max {
                    break;
                }
                composite[m] = true;
                if i % p == 0 {
                    mobius[m] = 0;
                    break;
                }
                mobius[m] = -mobius[i];
            }
        }
        Ok(Self { mobius, primes })
    }

    pub fn n_max(&self) -> usize {
        self.mobius.len() - 1
    }

    /// `mu(n)` for `1 <= n <= n_max`.
    pub fn mobius(&self, n: usize) -> i8 {
        self.mobius[n]
    }

    /// `mu(1), ..., mu(n_max)`.
    pub fn mobius_values(&self) -> &[i8] {
        &self.mobius[1..]
    }

    pub fn primes(&self) -> &[u32] {
        &self.primes
    }
}

/// `[mu(1), ..., mu(n_max)]`.
pub fn mobius_sieve(n_max: usize) -> Result<Vec<i8>> {
    Ok(Sieve::new(n_max)?.mobius_values().to_vec())
}

/// Partial evaluations of `1 / zeta(s)` on the real axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InverseZetaPartials {
    /// `prod_{p <= prime_limit} (1 - p^-s)`.
    pub euler_product: f64,
    /// `sum_{n <= n_max} mu(n) n^-s`.
    pub mobius_sum: f64,
    /// `1 / zeta(s)` from the series engine.
    pub direct: f64,
    /// Bound on `|euler_product - 1/zeta(s)|`.
    pub euler_tail_bound: f64,
    /// Bound on `|mobius_sum - 1/zeta(s)|`.
    pub mobius_tail_bound: f64,
}

/// `sum_{n > cutoff} n^-s <= int_cutoff^inf x^-s dx = cutoff^(1-s) / (s - 1)`.
pub fn power_tail_bound(s: f64, cutoff: usize) -> f64 {
    (cutoff as f64).powf(1.0 - s) / (s - 1.0)
}

/// Neumaier-compensated sum.
pub(crate) fn compensated_sum(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0;
    let mut carry = 0.0;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            carry += (sum - t) + v;
        } else {
            carry += (v - t) + sum;
        }
        sum = t;
    }
    sum + carry
}

/// Euler-product and Möbius-sum partials of `1/zeta(s)` for real `s > 1`.
///
/// The tail of the product over primes `p > P` lies in
/// `[1 - sum_{p>P} p^-s, 1]`, and the product itself is below 1, so both
/// partials share the integral-test bound on `sum_{n>N} n^-s` (no prime
/// density factor is applied).
pub fn inverse_zeta_partials(s: f64, prime_limit: usize, n_max: usize) -> Result<InverseZetaPartials> {
    if !(s.is_finite() && s > 1.0) {
        return Err(Error::OutOfDomain(format!(
            "partials need real s > 1, got {s}"
        )));
    }
    if prime_limit == 0 || n_max == 0 {
        return Err(Error::OutOfDomain("truncation limits must be positive".into()));
    }
    let sieve = Sieve::new(prime_limit.max(n_max))?;
    let euler_product = sieve
        .primes()
        .iter()
        .take_while(|&&p| (p as usize) <= prime_limit)
        .fold(1.0, |acc, &p| acc * (1.0 - (-(s) * (p as f64).ln()).exp()));
    let mobius_sum = compensated_sum(
        sieve.mobius_values()[..n_max]
            .iter()
            .enumerate()
            .filter(|(_, &mu)| mu != 0)
            .map(|(i, &mu)| f64::from(mu) * (-(s) * ((i + 1) as f64).ln()).exp()),
    );
    let direct = 1.0 / zeta(ComplexValue::new(s, 0.0), &EvalOptions::default())?.re;
    Ok(InverseZetaPartials {
        euler_product,
        mobius_sum,
        direct,
        euler_tail_bound: power_tail_bound(s, prime_limit),
        mobius_tail_bound: power_tail_bound(s, n_max),
    })
}
