//! Globally adaptive panel refinement.
//!
//! Refinement proceeds in rounds. Each round bisects every panel whose
//! error exceeds `tol / panel_count`; the new halves are evaluated either
//! serially or on the rayon pool, and totals are always accumulated left to
//! right by panel position, so both modes return bit-identical results.

use rayon::prelude::*;

use super::gk::{gauss_kronrod_21, PanelEstimate};
use crate::arith::compensated_sum;
use crate::error::{Error, Result};

/// How panel evaluations are scheduled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    #[default]
    Serial,
    Parallel,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdaptiveOptions {
    /// Absolute tolerance on the whole integral.
    pub tol: f64,
    /// Refinement stops with an error once this many panels exist.
    pub max_panels: usize,
    pub execution: Execution,
}

impl Default for AdaptiveOptions {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            max_panels: 200_000,
            execution: Execution::Serial,
        }
    }
}

/// Result of an adaptive integration over a finite range.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: f64,
    pub error: f64,
    pub panels: usize,
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    estimate: PanelEstimate,
}

fn evaluate<F>(f: &F, intervals: &[(f64, f64)], execution: Execution) -> Vec<Panel>
where
    F: Fn(f64) -> f64 + Sync,
{
    let one = |&(a, b): &(f64, f64)| Panel {
        a,
        b,
        estimate: gauss_kronrod_21(f, a, b),
    };
    match execution {
        Execution::Serial => intervals.iter().map(one).collect(),
        Execution::Parallel => intervals.par_iter().map(one).collect(),
    }
}

fn splittable(a: f64, b: f64) -> bool {
    let mid = 0.5 * (a + b);
    a < mid && mid < b && (b - a) > 64.0 * f64::EPSILON * a.abs().max(b.abs())
}

/// Integrate `f` over `[breakpoints[0], breakpoints[last]]`, starting from
/// the partition given by `breakpoints` (ascending, duplicates ignored).
pub fn integrate_adaptive<F>(f: &F, breakpoints: &[f64], opts: &AdaptiveOptions) -> Result<Integral>
where
    F: Fn(f64) -> f64 + Sync,
{
    if opts.tol.is_nan() || opts.tol <= 0.0 {
        return Err(Error::OutOfDomain(format!("tolerance must be positive, got {}", opts.tol)));
    }
    if breakpoints.len() < 2 || breakpoints.iter().any(|x| !x.is_finite()) {
        return Err(Error::OutOfDomain("need at least two finite breakpoints".into()));
    }
    if breakpoints.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::OutOfDomain("breakpoints must be ascending".into()));
    }
    let initial: Vec<(f64, f64)> = breakpoints
        .windows(2)
        .filter(|w| w[1] > w[0])
        .map(|w| (w[0], w[1]))
        .collect();
    if initial.is_empty() {
        return Ok(Integral {
            value: 0.0,
            error: 0.0,
            panels: 0,
        });
    }

    let mut panels = evaluate(f, &initial, opts.execution);
    loop {
        if let Some(bad) = panels
            .iter()
            .find(|p| !(p.estimate.value.is_finite() && p.estimate.error.is_finite()))
        {
            return Err(Error::OutOfDomain(format!(
                "integrand is not finite on [{}, {}]",
                bad.a, bad.b
            )));
        }
        let value = compensated_sum(panels.iter().map(|p| p.estimate.value));
        let error = compensated_sum(panels.iter().map(|p| p.estimate.error));
        if error <= opts.tol {
            return Ok(Integral {
                value,
                error,
                panels: panels.len(),
            });
        }
        let not_reached = Error::ToleranceNotReached {
            tol: opts.tol,
            value,
            error,
            panels: panels.len(),
        };
        let threshold = opts.tol / panels.len() as f64;
        let split: Vec<bool> = panels
            .iter()
            .map(|p| p.estimate.error > threshold && splittable(p.a, p.b))
            .collect();
        let n_split = split.iter().filter(|&&s| s).count();
        if n_split == 0 || panels.len() + n_split > opts.max_panels {
            return Err(not_reached);
        }
        let halves: Vec<(f64, f64)> = panels
            .iter()
            .zip(&split)
            .filter(|(_, &s)| s)
            .flat_map(|(p, _)| {
                let mid = 0.5 * (p.a + p.b);
                [(p.a, mid), (mid, p.b)]
            })
            .collect();
        let mut fresh = evaluate(f, &halves, opts.execution).into_iter();
        let mut next = Vec::with_capacity(panels.len() + n_split);
        for (p, s) in panels.into_iter().zip(split) {
            if s {
                next.extend(fresh.by_ref().take(2));
            } else {
                next.push(p);
            }
        }
        panels = next;
    }
}
