//! Hardy's Z function: Z(t) = exp(i theta(t)) zeta(1/2 + it), real for
//! real t, so its sign changes locate critical-line zeros.
//!
//! Below the switchover height the product is evaluated directly through
//! zeta_complex. Above it the Riemann-Siegel main sum with the leading
//! correction term is used; that keeps the error around 1e-4 near the
//! switchover, falling off like t^{-3/4}, which is all the sign-based
//! scanner needs.

use num_complex::Complex64;
use std::f64::consts::PI;

use super::theta::theta_unchecked;
use super::zeta::zeta_complex;
use super::EvalAccuracy;
use crate::error::{Error, Result};

/// Heights above this use the Riemann-Siegel sum.
pub const RIEMANN_SIEGEL_CUTOVER: f64 = 200.0;

/// Z(t) for t >= 0.
pub fn z_function(t: f64, acc: &EvalAccuracy) -> Result<f64> {
    if !(t >= 0.0) {
        return Err(Error::domain(format!("z_function requires t >= 0, got {t}")));
    }
    if t < RIEMANN_SIEGEL_CUTOVER {
        let tol = acc.abs_tol.min(1e-8);
        let zeta = zeta_complex(Complex64::new(0.5, t), &EvalAccuracy::new(tol)?)?;
        let phase = Complex64::new(0.0, theta_unchecked(t)).exp();
        Ok((phase * zeta).re)
    } else {
        Ok(riemann_siegel(t))
    }
}

/// Main sum plus the leading correction term.
fn riemann_siegel(t: f64) -> f64 {
    let a = (t / (2.0 * PI)).sqrt();
    let m = a.floor() as usize;
    let p = a - m as f64;
    let theta = theta_unchecked(t);
    let mut sum = 0.0;
    for n in 1..=m {
        let nf = n as f64;
        sum += (theta - t * nf.ln()).cos() / nf.sqrt();
    }
    let sign = if m.is_multiple_of(2) { -1.0 } else { 1.0 };
    2.0 * sum + sign * leading_correction(p) / a.sqrt()
}

/// psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p), extended across its
/// removable singularities at p = 1/4 and p = 3/4.
fn leading_correction(p: f64) -> f64 {
    let num_arg = 2.0 * PI * (p * p - p - 0.0625);
    let den = (2.0 * PI * p).cos();
    if den.abs() < 1e-9 {
        // l'Hopital at the removable points; both give the value 1/2.
        return (2.0 * p - 1.0) * num_arg.sin() / (2.0 * PI * p).sin();
    }
    num_arg.cos() / den
}
