//! Lorentz-measure integrals of `ln|zeta|`, the potentials built from them,
//! and the hidden-symmetry map pairing lines inside and outside the
//! critical strip.
//!
//! The crate is organized bottom-up:
//!
//! * [`zeta`]: zeta, `ln|zeta|` and `zeta'/zeta` on `Re s > 0`;
//! * [`arith`]: Möbius sieve, Euler-product and Möbius-sum partials;
//! * [`quadrature`]: adaptive Gauss-Kronrod line integrals with tail bounds;
//! * [`potentials`]: numeric and closed-form potentials, electric fields;
//! * [`symmetry`]: solving `zeta(2 alpha') = 1 / (1 - 2 alpha)` and
//!   comparing the two theta-form integrals;
//! * [`experiment`]: the strip experiment, figure data, validation suites
//!   and the CSV/JSON records written by the `lorentz-zeta` binary.

pub mod arith;
pub mod error;
pub mod experiment;
pub mod potentials;
pub mod quadrature;
pub mod symmetry;
pub mod zeta;

pub use error::{Error, Result};
