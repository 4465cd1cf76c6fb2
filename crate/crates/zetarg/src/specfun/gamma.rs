//! Complex log-gamma on the right half-plane.
//!
//! Arguments with |z| below the Stirling radius are shifted up by the
//! recurrence log Gamma(z) = log Gamma(z+1) - log z; every shifted point
//! stays in the right half-plane, so the principal logs never cross a
//! branch cut and the result is the standard analytic branch with
//! log Gamma(1) = 0.

use num_complex::Complex64;

use super::tables::STIRLING;
use crate::error::{Error, Result};

const STIRLING_RADIUS: f64 = 10.0;
const LN_TWO_PI: f64 = 1.8378770664093453;

/// Principal-branch log Gamma(z) for Re(z) > 0. Callers needing the left
/// half-plane reflect first.
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if !(z.re > 0.0) || !z.im.is_finite() {
        return Err(Error::domain(format!(
            "log_gamma requires Re(z) > 0, got z = {z}"
        )));
    }
    let mut shift = Complex64::new(0.0, 0.0);
    let mut w = z;
    while w.norm() < STIRLING_RADIUS {
        shift += w.ln();
        w += 1.0;
    }
    Ok(stirling(w) - shift)
}

fn stirling(w: Complex64) -> Complex64 {
    let mut series = Complex64::new(0.0, 0.0);
    let w2 = w * w;
    let mut power = w; // w^{2k-1} at k = 1
    for coeff in STIRLING {
        series += coeff / power;
        power *= w2;
    }
    (w - 0.5) * w.ln() - w + 0.5 * LN_TWO_PI + series
}
