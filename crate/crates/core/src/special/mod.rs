//! Numerical kernels used throughout the crate.

mod expm;
mod gamma;
mod laguerre;
mod quadrature;

pub use expm::{matrix_exp, MATRIX_EXP_DIM_CAP};
pub use gamma::log_gamma;
pub use laguerre::{laguerre, laguerre_derivative, laguerre_generating_closed};
pub use quadrature::{integrate_halfline, QuadratureSpec, TailCutoff};

pub(crate) use gamma::log_gamma_unchecked;
pub(crate) use laguerre::{laguerre_sequence, laguerre_value};
