//! Riemann zeta evaluation on the half-plane `Re s > 0`.
//!
//! The main route sums the alternating Dirichlet eta series with Borwein's
//! acceleration weights and divides by `1 - 2^(1-s)`. Where that factor is
//! small (near `s = 1`, and near `Re s = 1` at `t = 2 pi k / ln 2`) the
//! quotient loses digits, so a Euler-Maclaurin summation takes over.

use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A point `s = sigma + i t`.
pub type ComplexValue = Complex64;

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_606_512_090_082;

/// `|s - 1|` below this is treated as the pole.
pub const POLE_GUARD: f64 = 1e-8;

/// Below this value of `|1 - 2^(1-s)|` the eta quotient is abandoned for
/// Euler-Maclaurin summation.
const ETA_DENOMINATOR_FLOOR: f64 = 1e-3;

/// Truncation controls for the series evaluators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalOptions {
    /// Target absolute error on `zeta(s)`.
    pub abs_tol: f64,
    /// Cap on the number of series terms.
    pub max_terms: usize,
}

impl Default for EvalOptions {
    fn default() -> Self {
        Self {
            abs_tol: 1e-12,
            max_terms: 2000,
        }
    }
}

impl EvalOptions {
    pub fn new(abs_tol: f64, max_terms: usize) -> Result<Self> {
        let opts = Self { abs_tol, max_terms };
        opts.validate()?;
        Ok(opts)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0 && self.abs_tol.is_finite()) {
            return Err(Error::OutOfDomain(format!(
                "abs_tol must be positive, got {}",
                self.abs_tol
            )));
        }
        if self.max_terms < 16 {
            return Err(Error::OutOfDomain(format!(
                "max_terms must be at least 16, got {}",
                self.max_terms
            )));
        }
        Ok(())
    }
}

fn check_argument(s: ComplexValue) -> Result<()> {
    if !(s.re.is_finite() && s.im.is_finite()) {
        return Err(Error::OutOfDomain(format!("non-finite argument {s}")));
    }
    if s.re <= 0.0 {
        return Err(Error::OutOfDomain(format!(
            "Re s must be positive, got {}",
            s.re
        )));
    }
    let distance = (s - 1.0).norm();
    if distance < POLE_GUARD {
        return Err(Error::PoleAtOne { distance });
    }
    Ok(())
}

/// `1 - 2^(1-s)`.
fn eta_denominator(s: ComplexValue) -> ComplexValue {
    1.0 - ((1.0 - s) * LN_2).exp()
}

/// Number of accelerated terms so that the truncation error of
/// `eta(s) / (1 - 2^(1-s))` stays below `tol`.
///
/// Geometric error model of the scheme for `Re s > 0`:
/// `3 (1 + 2|t|) e^(pi |t| / 2) / ((3 + sqrt 8)^n |1 - 2^(1-s)|)`.
fn accelerated_terms(t_abs: f64, tol: f64, denominator: f64) -> usize {
    let rate = (3.0 + 8f64.sqrt()).ln();
    let log_bound = (3.0 * (1.0 + 2.0 * t_abs) / (tol * denominator)).ln() + PI * t_abs / 2.0;
    ((log_bound / rate).ceil().max(8.0)) as usize
}

/// Acceleration weights `w_k = (d_n - d_k) / d_n`, `k = 0..n`.
///
/// `d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!)`. The summands reach
/// `(3 + sqrt 8)^n` so they are built in log space and rescaled by their
/// peak; the weights come from suffix sums, never from `1 - d_k / d_n`.
fn acceleration_weights(n: usize) -> Vec<f64> {
    let nf = n as f64;
    let mut log_terms = Vec::with_capacity(n + 1);
    let mut acc = 0.0;
    log_terms.push(acc);
    for i in 0..n {
        let i = i as f64;
        acc += (4.0 * (nf + i) * (nf - i)).ln() - ((2.0 * i + 1.0) * (2.0 * i + 2.0)).ln();
        log_terms.push(acc);
    }
    let peak = log_terms.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let mut suffix = vec![0.0; n + 2];
    for i in (0..=n).rev() {
        suffix[i] = suffix[i + 1] + (log_terms[i] - peak).exp();
    }
    let total = suffix[0];
    (0..n).map(|k| suffix[k + 1] / total).collect()
}

/// Weighted alternating sum and, optionally, its term-wise derivative in `s`.
fn eta_sum(s: ComplexValue, weights: &[f64], with_derivative: bool) -> (ComplexValue, ComplexValue) {
    let mut eta = Complex64::new(0.0, 0.0);
    let mut deta = Complex64::new(0.0, 0.0);
    for (k, &w) in weights.iter().enumerate() {
        let log_n = ((k + 1) as f64).ln();
        let term = (-s * log_n).exp() * w;
        let signed = if k % 2 == 0 { term } else { -term };
        eta += signed;
        if with_derivative {
            deta -= signed * log_n;
        }
    }
    (eta, deta)
}

// B_2k / (2k)!, k = 1..14.
fn bernoulli_coefficients() -> [f64; 14] {
    const B: [f64; 14] = [
        1.0 / 6.0,
        -1.0 / 30.0,
        1.0 / 42.0,
        -1.0 / 30.0,
        5.0 / 66.0,
        -691.0 / 2730.0,
        7.0 / 6.0,
        -3617.0 / 510.0,
        43867.0 / 798.0,
        -174611.0 / 330.0,
        854513.0 / 138.0,
        -236364091.0 / 2730.0,
        8553103.0 / 6.0,
        -23749461029.0 / 870.0,
    ];
    let mut out = [0.0; 14];
    let mut factorial = 1.0;
    for (k, b) in B.iter().enumerate() {
        let m = 2 * (k + 1);
        factorial *= ((m - 1) * m) as f64;
        out[k] = b / factorial;
    }
    out
}

/// Euler-Maclaurin summation of `zeta(s)` and `zeta'(s)`.
///
/// With `N >= |s| + 10` cut-off and 14 Bernoulli corrections the remainder
/// ratio per correction is below `1 / (2 pi)^2`, well under `1e-15` overall.
/// Valid for every `s != 1`; the pole term `N^(1-s) / (s - 1)` is explicit.
pub fn zeta_euler_maclaurin(s: ComplexValue, opts: &EvalOptions) -> Result<(ComplexValue, ComplexValue)> {
    check_argument(s)?;
    let cutoff = (s.norm() + 10.0).ceil().max(16.0) as usize;
    if cutoff > opts.max_terms {
        return Err(Error::NoConvergence {
            needed: cutoff,
            max_terms: opts.max_terms,
        });
    }
    let mut zeta = Complex64::new(0.0, 0.0);
    let mut dzeta = Complex64::new(0.0, 0.0);
    for n in 1..cutoff {
        let log_n = (n as f64).ln();
        let term = (-s * log_n).exp();
        zeta += term;
        dzeta -= term * log_n;
    }
    let nf = cutoff as f64;
    let log_cut = nf.ln();
    let n_pow = (-s * log_cut).exp();
    let sm1 = s - 1.0;
    let pole = n_pow * nf / sm1;
    zeta += pole + 0.5 * n_pow;
    dzeta += -pole * log_cut - pole / sm1 - 0.5 * n_pow * log_cut;

    let mut rising = s;
    let mut harmonic = 1.0 / s;
    let mut power = n_pow / nf;
    let mut last = Complex64::new(0.0, 0.0);
    for (k, c) in bernoulli_coefficients().iter().enumerate() {
        let term = rising * power * *c;
        zeta += term;
        dzeta += term * (harmonic - log_cut);
        last = term;
        let j = (2 * k + 1) as f64;
        rising *= (s + j) * (s + j + 1.0);
        harmonic += 1.0 / (s + j) + 1.0 / (s + j + 1.0);
        power /= nf * nf;
    }
    if last.norm() > opts.abs_tol.max(f64::EPSILON * zeta.norm()) {
        return Err(Error::NoConvergence {
            needed: cutoff,
            max_terms: opts.max_terms,
        });
    }
    Ok((zeta, dzeta))
}

/// `zeta(s)` for `Re s > 0`, `s != 1`.
pub fn zeta(s: ComplexValue, opts: &EvalOptions) -> Result<ComplexValue> {
    opts.validate()?;
    check_argument(s)?;
    let denom = eta_denominator(s);
    if denom.norm() < ETA_DENOMINATOR_FLOOR {
        return zeta_euler_maclaurin(s, opts).map(|(z, _)| z);
    }
    let n = accelerated_terms(s.im.abs(), opts.abs_tol, denom.norm());
    if n > opts.max_terms {
        return Err(Error::NoConvergence {
            needed: n,
            max_terms: opts.max_terms,
        });
    }
    let (eta, _) = eta_sum(s, &acceleration_weights(n), false);
    Ok(eta / denom)
}

/// `ln |zeta(s)|`. Near a zero the result is large and negative but finite.
pub fn log_abs_zeta(s: ComplexValue, opts: &EvalOptions) -> Result<f64> {
    let z = zeta(s, opts)?;
    let modulus = z.norm();
    if modulus == 0.0 {
        return Err(Error::OutOfDomain(format!("s = {s} evaluates to a zero of zeta")));
    }
    Ok(modulus.ln())
}

/// `zeta'(s) / zeta(s)` from the term-wise differentiated series.
pub fn zeta_log_derivative(s: ComplexValue, opts: &EvalOptions) -> Result<ComplexValue> {
    opts.validate()?;
    check_argument(s)?;
    let denom = eta_denominator(s);
    let (value, derivative) = if denom.norm() < ETA_DENOMINATOR_FLOOR {
        zeta_euler_maclaurin(s, opts)?
    } else {
        // The differentiated series carries an extra ln(k) per term.
        let n = accelerated_terms(s.im.abs(), opts.abs_tol * 1e-2, denom.norm());
        if n > opts.max_terms {
            return Err(Error::NoConvergence {
                needed: n,
                max_terms: opts.max_terms,
            });
        }
        let (eta, deta) = eta_sum(s, &acceleration_weights(n), true);
        if eta.norm() == 0.0 {
            return Err(Error::OutOfDomain(format!("s = {s} is a zero of zeta")));
        }
        // zeta'/zeta = eta'/eta - D'/D with D = 1 - 2^(1-s), D' = ln2 2^(1-s).
        let ddenom = (1.0 - denom) * LN_2;
        return Ok(deta / eta - ddenom / denom);
    };
    if value.norm() == 0.0 {
        return Err(Error::OutOfDomain(format!("s = {s} is a zero of zeta")));
    }
    Ok(derivative / value)
}

/// Zeta restricted to one vertical line `Re s = sigma`, with the series
/// coefficients precomputed for every `|t| <= t_max`.
///
/// Integrands call this thousands of times per line; only the phases
/// `t ln(k+1)` change between calls.
#[derive(Debug, Clone)]
pub struct ZetaLine {
    sigma: f64,
    t_max: f64,
    opts: EvalOptions,
    coefficients: Vec<f64>,
    logs: Vec<f64>,
}

impl ZetaLine {
    pub fn new(sigma: f64, t_max: f64, opts: &EvalOptions) -> Result<Self> {
        opts.validate()?;
        if !(sigma.is_finite() && sigma > 0.0) {
            return Err(Error::OutOfDomain(format!(
                "line abscissa must be positive, got {sigma}"
            )));
        }
        if !(t_max.is_finite() && t_max >= 0.0) {
            return Err(Error::OutOfDomain(format!("invalid line height {t_max}")));
        }
        // |1 - 2^(1-sigma) e^(-i t ln 2)| >= |1 - 2^(1-sigma)|; below the
        // floor eval() switches route anyway.
        let denom_min = (1.0 - (1.0 - sigma).exp2()).abs().max(ETA_DENOMINATOR_FLOOR);
        let n = accelerated_terms(t_max, opts.abs_tol, denom_min);
        if n > opts.max_terms {
            return Err(Error::NoConvergence {
                needed: n,
                max_terms: opts.max_terms,
            });
        }
        let weights = acceleration_weights(n);
        let logs: Vec<f64> = (1..=n).map(|k| (k as f64).ln()).collect();
        let coefficients = weights
            .iter()
            .zip(&logs)
            .enumerate()
            .map(|(k, (w, l))| {
                let c = w * (-sigma * l).exp();
                if k % 2 == 0 {
                    c
                } else {
                    -c
                }
            })
            .collect();
        Ok(Self {
            sigma,
            t_max,
            opts: *opts,
            coefficients,
            logs,
        })
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn t_max(&self) -> f64 {
        self.t_max
    }

    pub fn terms(&self) -> usize {
        self.coefficients.len()
    }

    /// `zeta(sigma + i t)`. Heights beyond `t_max` use the general evaluator.
    pub fn eval(&self, t: f64) -> Result<ComplexValue> {
        let s = Complex64::new(self.sigma, t);
        if t.abs() > self.t_max {
            return zeta(s, &self.opts);
        }
        check_argument(s)?;
        let denom = eta_denominator(s);
        if denom.norm() < ETA_DENOMINATOR_FLOOR {
            return zeta_euler_maclaurin(s, &self.opts).map(|(z, _)| z);
        }
        let mut re = 0.0;
        let mut im = 0.0;
        for (c, l) in self.coefficients.iter().zip(&self.logs) {
            let (sin, cos) = (t * l).sin_cos();
            re += c * cos;
            im -= c * sin;
        }
        Ok(Complex64::new(re, im) / denom)
    }

    /// `ln |zeta(sigma + i t)|`; `+inf` at the pole, `-inf` at an exact zero,
    /// NaN if evaluation fails.
    pub fn ln_abs(&self, t: f64) -> f64 {
        match self.eval(t) {
            Ok(z) => z.norm().ln(),
            Err(Error::PoleAtOne { .. }) => f64::INFINITY,
            Err(_) => f64::NAN,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> ComplexValue {
        Complex64::new(re, im)
    }

    #[test]
    fn weights_are_monotone_and_bounded() {
        let w = acceleration_weights(40);
        assert_eq!(w.len(), 40);
        assert!(w.windows(2).all(|p| p[0] >= p[1]));
        assert!(w[0] <= 1.0 && w[0] > 0.999);
        assert!(*w.last().unwrap() >= 0.0);
    }

    #[test]
    fn large_term_counts_do_not_overflow() {
        let w = acceleration_weights(1900);
        assert!(w.iter().all(|x| x.is_finite() && (0.0..=1.0).contains(x)));
    }

    #[test]
    fn closed_forms_on_real_axis() {
        let opts = EvalOptions::default();
        let z2 = zeta(c(2.0, 0.0), &opts).unwrap();
        assert!((z2.re - PI * PI / 6.0).abs() <= 1e-12);
        assert!(z2.im.abs() <= 1e-15);
        let z4 = zeta(c(4.0, 0.0), &opts).unwrap();
        assert!((z4.re - PI.powi(4) / 90.0).abs() <= 1e-12);
    }

    #[test]
    fn domain_errors() {
        let opts = EvalOptions::default();
        assert!(matches!(zeta(c(1.0, 0.0), &opts), Err(Error::PoleAtOne { .. })));
        assert!(matches!(zeta(c(1.0 + 1e-9, 0.0), &opts), Err(Error::PoleAtOne { .. })));
        assert!(matches!(zeta(c(0.0, 3.0), &opts), Err(Error::OutOfDomain(_))));
        assert!(matches!(zeta(c(-1.0, 0.0), &opts), Err(Error::OutOfDomain(_))));
        assert!(matches!(zeta(c(f64::NAN, 0.0), &opts), Err(Error::OutOfDomain(_))));
        assert!(matches!(
            zeta(c(0.5, 5000.0), &opts),
            Err(Error::NoConvergence { .. })
        ));
        assert!(EvalOptions::new(1e-12, 8).is_err());
        assert!(EvalOptions::new(0.0, 100).is_err());
    }

    #[test]
    fn near_pole_uses_explicit_pole_term() {
        let opts = EvalOptions::default();
        let eps = 1e-6;
        let z = zeta(c(1.0 + eps, 0.0), &opts).unwrap();
        // zeta(1 + e) = 1/e + gamma + O(e)
        assert!((z.re - (1.0 / eps + EULER_GAMMA)).abs() < 1e-4);
        let d = zeta_log_derivative(c(1.0 + eps, 0.0), &opts).unwrap();
        // zeta'/zeta ~ -1/(s-1) + gamma
        assert!((d.re + 1.0 / eps - EULER_GAMMA).abs() < 1e-3);
    }

    #[test]
    fn euler_maclaurin_agrees_with_eta_route() {
        let opts = EvalOptions::default();
        for s in [c(0.3, 5.0), c(2.0, 0.0), c(0.81606, 100.0), c(1.7, -40.0)] {
            let a = zeta(s, &opts).unwrap();
            let (b, _) = zeta_euler_maclaurin(s, &opts).unwrap();
            assert!((a - b).norm() < 1e-11, "{s}: {a} vs {b}");
        }
    }

    #[test]
    fn line_matches_pointwise_evaluator() {
        let opts = EvalOptions::default();
        let line = ZetaLine::new(0.81606, 150.0, &opts).unwrap();
        for t in [0.0, 3.5, 14.1, 99.9, 150.0, -20.0, 400.0] {
            let a = line.eval(t).unwrap();
            let b = zeta(c(0.81606, t), &opts).unwrap();
            assert!((a - b).norm() < 1e-11, "t = {t}");
        }
    }

    #[test]
    fn line_at_sigma_one_handles_denominator_zeros() {
        let opts = EvalOptions::default();
        let line = ZetaLine::new(1.0, 50.0, &opts).unwrap();
        let t = 2.0 * PI / LN_2;
        let z = line.eval(t).unwrap();
        // zeta(1 + 9.0647202836543876i), 30-digit reference
        assert!((z - c(1.346_579_542_836_317_1, 0.109_883_136_796_269_5)).norm() < 1e-11);
        assert_eq!(line.ln_abs(0.0), f64::INFINITY);
    }
}
