//! Numerical special functions underpinning the bound machinery: real and
//! complex zeta, complex log-gamma, Riemann-Siegel theta and Z.
//!
//! Everything here is a pure function of its arguments and safe to call
//! from any number of threads.

mod gamma;
mod tables;
mod theta;
mod zeta;
mod zfunc;

pub use gamma::log_gamma;
pub use theta::theta_rs;
pub use zeta::{zeta_complex, zeta_real};
pub use zfunc::{z_function, RIEMANN_SIEGEL_CUTOVER};

use crate::error::{Error, Result};

/// Accuracy request for an evaluation.
///
/// `abs_tol` bounds the truncation remainder of the underlying series; the
/// machine-rounding floor (a few ulp of the result) is on top of that.
/// `terms_hint` floors the initial term count when set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalAccuracy {
    pub abs_tol: f64,
    pub terms_hint: Option<usize>,
}

impl EvalAccuracy {
    pub fn new(abs_tol: f64) -> Result<Self> {
        if !(abs_tol > 0.0) {
            return Err(Error::domain(format!(
                "abs_tol must be positive, got {abs_tol}"
            )));
        }
        Ok(Self {
            abs_tol,
            terms_hint: None,
        })
    }

    /// Default target for zeta on the real axis.
    pub fn real_default() -> Self {
        Self {
            abs_tol: 1e-12,
            terms_hint: None,
        }
    }

    /// Default target for complex zeta.
    pub fn complex_default() -> Self {
        Self {
            abs_tol: 1e-6,
            terms_hint: None,
        }
    }

    /// Default target for the Z function.
    pub fn z_default() -> Self {
        Self {
            abs_tol: 1e-6,
            terms_hint: None,
        }
    }
}
