//! The end-product bound formulas: the Backlund-method linear bound
//! |S(T)| <= a + b log T with its two coefficient functions, Rosser's
//! classical benchmark, and the small-radius Jensen-circle variant with
//! its printed five-coefficient form.

use serde::Serialize;
use std::f64::consts::PI;

use crate::critline::{CertLabel, CriticalLineBound};
use crate::error::{Error, Result};
use crate::specfun::{zeta_real, EvalAccuracy};

/// Which derivation produced a linear bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum BoundMethod {
    /// Backlund's method with reflection (the radius-2 Jensen circle).
    Backlund,
    /// Rosser's refinement of the classical bound.
    Rosser,
    /// The small-radius Jensen circle without reflection.
    SmallRadius { r: f64 },
}

/// A bound |S(T)| <= a + b log T asserted for T >= t0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LinearBound {
    pub a: f64,
    pub b: f64,
    pub t0: f64,
    pub method: BoundMethod,
}

impl LinearBound {
    /// a + b log T, refusing to extrapolate below the asserted height.
    pub fn value_at(&self, t: f64) -> Result<f64> {
        if !(t >= self.t0) {
            return Err(Error::domain(format!(
                "bound asserted for T >= {}, asked at {t}",
                self.t0
            )));
        }
        Ok(self.a + self.b * t.ln())
    }
}

/// Free parameters feeding the Backlund-method bound: the strip half-width
/// eta, the height floor t0 > 3, and the critical-line certificate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundParams {
    pub eta: f64,
    pub t0: f64,
    pub cert: CriticalLineBound,
}

impl BoundParams {
    pub fn new(eta: f64, t0: f64, cert: CriticalLineBound) -> Result<Self> {
        if !(eta > 0.0 && eta <= 0.5) {
            return Err(Error::domain(format!(
                "bound parameters require 0 < eta <= 1/2, got {eta}"
            )));
        }
        if !(t0 > 3.0) {
            return Err(Error::domain(format!(
                "bound parameters require t0 > 3, got {t0}"
            )));
        }
        Ok(Self { eta, t0, cert })
    }
}

// Coefficients of the slope formula: both are positive, so the slope is
// strictly increasing in eta and in theta.
const SLOPE_THETA_WEIGHT: f64 = 1.0 + PI / 3.0 - 1.7320508075688772; // 1 + pi/3 - sqrt(3)
const SLOPE_ETA_WEIGHT: f64 = 1.7320508075688772 - PI / 3.0; // sqrt(3) - pi/3

// Coefficients of the constant-term formula.
const INTERCEPT_ZETA_WEIGHT: f64 = 1.85;
const INTERCEPT_PREFACTOR_WEIGHT: f64 = 0.71;
const INTERCEPT_SHIFT: f64 = -0.58;

/// The log-T coefficient b(eta, theta) of the Backlund-method bound.
pub fn backlund_slope(eta: f64, theta: f64) -> Result<f64> {
    if !(eta > 0.0 && eta <= 0.5) {
        return Err(Error::domain(format!(
            "slope requires 0 < eta <= 1/2, got {eta}"
        )));
    }
    check_theta(theta)?;
    Ok(slope_unchecked(eta, theta))
}

/// The eta -> 0 limit of the slope, the best coefficient the method can
/// reach for a given critical-line exponent.
pub fn backlund_slope_eta_limit(theta: f64) -> Result<f64> {
    check_theta(theta)?;
    Ok(slope_unchecked(0.0, theta))
}

fn check_theta(theta: f64) -> Result<()> {
    if !(theta > 0.0 && theta <= 0.25) {
        return Err(Error::domain(format!(
            "slope requires 0 < theta <= 1/4, got {theta}"
        )));
    }
    Ok(())
}

fn slope_unchecked(eta: f64, theta: f64) -> f64 {
    (2.0 * theta * SLOPE_THETA_WEIGHT + (eta + 0.5) * SLOPE_ETA_WEIGHT)
        / (2.0 * PI * std::f64::consts::LN_2)
}

/// The constant term a(delta, eta, T0) of the Backlund-method bound.
/// Requires a certificate with a prefactor.
pub fn backlund_intercept(params: &BoundParams) -> Result<f64> {
    let prefactor = params.cert.prefactor()?;
    let zeta = zeta_real(1.0 + params.eta, &EvalAccuracy::real_default())?;
    Ok(INTERCEPT_ZETA_WEIGHT * zeta.ln()
        + INTERCEPT_PREFACTOR_WEIGHT * prefactor.ln()
        + INTERCEPT_SHIFT
        + 1.0 / params.t0)
}

/// The Backlund-method linear bound for the given parameters.
pub fn backlund_bound(params: &BoundParams) -> Result<LinearBound> {
    Ok(LinearBound {
        a: backlund_intercept(params)?,
        b: backlund_slope(params.eta, params.cert.theta())?,
        t0: params.t0,
        method: BoundMethod::Backlund,
    })
}

/// Rosser's benchmark: |S(T)| <= 1.588 + (0.137 + 0.443 loglog T0 / log T0) log T,
/// valid for all T >= T0 >= 3.
pub fn rosser_bound(t0: f64) -> Result<LinearBound> {
    if !(t0 >= 3.0) {
        return Err(Error::domain(format!(
            "Rosser's bound is asserted for t0 >= 3, got {t0}"
        )));
    }
    let log_t0 = t0.ln();
    Ok(LinearBound {
        a: 1.588,
        b: 0.137 + 0.443 * log_t0.ln() / log_t0,
        t0,
        method: BoundMethod::Rosser,
    })
}

/// The five printed coefficients of the small-radius bound, tied to the
/// parameters they were evaluated at.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SmallRadiusCoeffs {
    pub r: f64,
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
    pub a4: f64,
    pub a5: f64,
    pub theta: f64,
    pub eta: f64,
    pub t0: f64,
}

/// Evaluate the five coefficient expressions verbatim for r in (1, 2).
/// The radius-2 case is exactly the Backlund-method bound and is excluded.
pub fn small_radius_coeffs(r: f64, theta: f64, eta: f64, t0: f64) -> Result<SmallRadiusCoeffs> {
    if !(r > 1.0 && r < 2.0) {
        return Err(Error::domain(format!(
            "small-radius coefficients require 1 < r < 2, got {r}"
        )));
    }
    if !(eta > 0.0 && eta <= 0.5) || !(theta > 0.0 && theta <= 0.25) || !(t0 > 3.0) {
        return Err(Error::domain(format!(
            "small-radius coefficients require 0 < eta <= 1/2, 0 < theta <= 1/4, t0 > 3; \
             got eta = {eta}, theta = {theta}, t0 = {t0}"
        )));
    }
    let asin_inv_r = (1.0 / r).asin();
    let root = (1.0 - 1.0 / (r * r)).sqrt();
    let sweep = asin_inv_r - 0.5 * PI + r * root;
    let a1 = 3.0 * PI / (8.0 * t0) - (0.5 * (2.0 * PI).ln()) * (0.5 * PI) - asin_inv_r + r * root;
    let a2 = 2.0 * (0.5 * PI - asin_inv_r) - 3.0 * r * root + r;
    let a3 = r * theta * (2.0 - root) + asin_inv_r + (0.5 + eta - 2.0 * theta) * sweep;
    let a4 = 1.5 * PI - asin_inv_r + 2.0 * r * root + 1.0 - r;
    let a5 = r * theta + (0.5 + eta - 2.0 * theta) * sweep;
    Ok(SmallRadiusCoeffs {
        r,
        a1,
        a2,
        a3,
        a4,
        a5,
        theta,
        eta,
        t0,
    })
}

/// The small-radius bound on |S(T)|, evaluated verbatim.
pub fn small_radius_bound(coeffs: &SmallRadiusCoeffs, prefactor: f64, t: f64) -> Result<f64> {
    let linear = small_radius_linear_bound(coeffs, prefactor)?;
    linear.value_at(t)
}

/// The same bound rearranged as a + b log T; the slope is
/// a5 / (pi log r).
pub fn small_radius_linear_bound(
    coeffs: &SmallRadiusCoeffs,
    prefactor: f64,
) -> Result<LinearBound> {
    if !(prefactor > 0.0) {
        return Err(Error::domain(format!(
            "small-radius bound requires a positive prefactor, got {prefactor}"
        )));
    }
    let zeta = zeta_real(1.0 + coeffs.eta, &EvalAccuracy::real_default())?;
    let log_zeta = zeta.ln();
    let denom = PI * coeffs.r.ln();
    let a = (2.0 / PI) * log_zeta
        + (coeffs.a1
            + coeffs.a2 * prefactor.ln()
            + coeffs.a3 * 9.0 / (2.0 * coeffs.t0 * coeffs.t0)
            + coeffs.a4 * log_zeta)
            / denom;
    Ok(LinearBound {
        a,
        b: coeffs.a5 / denom,
        t0: coeffs.t0,
        method: BoundMethod::SmallRadius { r: coeffs.r },
    })
}

/// Convenience: the slope a5 / (pi log r) alone, used by the comparison
/// scans.
pub fn small_radius_slope(coeffs: &SmallRadiusCoeffs) -> f64 {
    coeffs.a5 / (PI * coeffs.r.ln())
}

/// The certificate label the optimizer search modes map onto.
pub fn certificate_for_mode(label: CertLabel) -> Result<CriticalLineBound> {
    match label {
        CertLabel::Convexity => Ok(CriticalLineBound::convexity()),
        CertLabel::ChengGraham { delta } => CriticalLineBound::cheng_graham(delta),
        CertLabel::Custom => Err(Error::domain(
            "custom certificates carry their own parameters; construct them directly".to_string(),
        )),
    }
}
