//! Certified critical-line growth bounds of the form
//! |zeta(1/2 + it)| <= B |1 + s|^theta.
//!
//! Three providers cover the regimes of interest: the classical convexity
//! estimate (B = 2.53, theta = 1/4), the Cheng-Graham subconvexity bound
//! folded into power form (B = 3/(delta e), theta = 1/6 + delta), and a
//! custom certificate for exponents quoted without an explicit prefactor,
//! such as Huxley's 32/205.

use serde::Serialize;
use std::f64::consts::E;

use crate::error::{Error, Result};

/// How a certificate was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum CertLabel {
    Convexity,
    ChengGraham { delta: f64 },
    Custom,
}

/// A certified pair (B, theta) asserting |zeta(1/2 + it)| <= B |1 + s|^theta
/// for t >= valid_from. `prefactor` is None for coefficient-only
/// certificates, which fix the exponent but cannot price a constant term.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CriticalLineBound {
    prefactor: Option<f64>,
    theta: f64,
    valid_from: f64,
    label: CertLabel,
}

pub const CONVEXITY_PREFACTOR: f64 = 2.53;
pub const CONVEXITY_EXPONENT: f64 = 0.25;

/// Largest admissible delta: keeps 1/6 + delta at or below the convexity
/// exponent, past which the subconvexity mode is pointless.
pub const MAX_CHENG_GRAHAM_DELTA: f64 = 1.0 / 12.0;

impl CriticalLineBound {
    /// The convexity certificate, asserted from t = 0.
    pub fn convexity() -> Self {
        Self {
            prefactor: Some(CONVEXITY_PREFACTOR),
            theta: CONVEXITY_EXPONENT,
            valid_from: 0.0,
            label: CertLabel::Convexity,
        }
    }

    /// The Cheng-Graham bound in power form: the log factor is absorbed via
    /// log t <= t^delta / (delta e), so B = 3/(delta e) and
    /// theta = 1/6 + delta, asserted from t = 0.
    pub fn cheng_graham(delta: f64) -> Result<Self> {
        if !(delta > 0.0 && delta <= MAX_CHENG_GRAHAM_DELTA) {
            return Err(Error::domain(format!(
                "cheng_graham requires 0 < delta <= 1/12, got {delta}"
            )));
        }
        Ok(Self {
            prefactor: Some(3.0 / (delta * E)),
            theta: 1.0 / 6.0 + delta,
            valid_from: 0.0,
            label: CertLabel::ChengGraham { delta },
        })
    }

    /// A custom certificate. With `prefactor = None` the certificate is
    /// coefficient-only: good for the log-T slope, unusable for the
    /// constant term.
    pub fn custom(theta: f64, prefactor: Option<f64>) -> Result<Self> {
        if !(theta > 0.0 && theta <= 0.25) {
            return Err(Error::domain(format!(
                "custom certificate requires 0 < theta <= 1/4, got {theta}"
            )));
        }
        if let Some(b) = prefactor {
            if !(b > 0.0) {
                return Err(Error::domain(format!(
                    "custom certificate prefactor must be positive, got {b}"
                )));
            }
        }
        Ok(Self {
            prefactor,
            theta,
            valid_from: 0.0,
            label: CertLabel::Custom,
        })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn valid_from(&self) -> f64 {
        self.valid_from
    }

    pub fn label(&self) -> CertLabel {
        self.label
    }

    pub fn is_coefficient_only(&self) -> bool {
        self.prefactor.is_none()
    }

    /// The prefactor B, or an error for coefficient-only certificates.
    pub fn prefactor(&self) -> Result<f64> {
        self.prefactor.ok_or(Error::CoefficientOnly)
    }

    /// The certified right-hand side B |1 + s|^theta at s = 1/2 + it.
    pub fn eval(&self, t: f64) -> Result<f64> {
        let b = self.prefactor()?;
        Ok(b * 1.5f64.hypot(t).powf(self.theta))
    }
}

/// The Cheng-Graham bound as printed: 3 t^{1/6} log t, valid for t > e.
pub fn cheng_graham_raw(t: f64) -> Result<f64> {
    if !(t > E) {
        return Err(Error::domain(format!(
            "cheng_graham_raw requires t > e, got {t}"
        )));
    }
    Ok(3.0 * t.powf(1.0 / 6.0) * t.ln())
}
