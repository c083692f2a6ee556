//! Weighted improper integrals of `ln|zeta|` along vertical lines.

mod adaptive;
mod gk;
mod lorentz;
mod zeros;

pub use adaptive::{integrate_adaptive, AdaptiveOptions, Execution, Integral};
pub use gk::{gauss_kronrod_21, PanelEstimate};
pub use lorentz::{
    integrate_lorentz, integrate_theta_form, integrate_weighted, log_linear_identity, zeta_line,
    IdentityCheck, Kernel, LineOptions, LorentzMeasure, QuadratureResult, TailPolicy,
    DEFAULT_THETA_MAX, TAIL_SAMPLES,
};
pub use zeros::ZeroOrdinates;
