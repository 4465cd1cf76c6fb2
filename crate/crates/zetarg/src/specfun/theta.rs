//! Riemann-Siegel theta, the main term of the zero-counting function.

use num_complex::Complex64;

use super::gamma::log_gamma;
use crate::error::{Error, Result};

const LN_PI: f64 = 1.1447298858494002;

/// theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi, for t >= 1.
///
/// Evaluated through log_gamma rather than the truncated asymptotic series,
/// so it is accurate at the low end of the range too.
pub fn theta_rs(t: f64) -> Result<f64> {
    if !(t >= 1.0) {
        return Err(Error::domain(format!("theta_rs requires t >= 1, got {t}")));
    }
    Ok(theta_unchecked(t))
}

/// Same formula without the t >= 1 gate; the z-function needs theta on
/// [0, 1) as well.
pub(crate) fn theta_unchecked(t: f64) -> f64 {
    let lg = log_gamma(Complex64::new(0.25, 0.5 * t))
        .expect("1/4 + it/2 lies in the right half-plane");
    lg.im - 0.5 * t * LN_PI
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    // Oracle: the asymptotic series, good to well under 1e-6 for t >= 50.
    fn theta_asymptotic(t: f64) -> f64 {
        0.5 * t * (t / (2.0 * PI)).ln() - 0.5 * t - PI / 8.0 + 1.0 / (48.0 * t)
    }

    #[test]
    fn matches_asymptotic_series() {
        // Frozen from the asymptotic oracle (the 7/(5760 t^3) term it drops
        // is ~1e-8 at t = 100 and ~1e-11 at t = 1000).
        let frozen = [(100.0, 87.97216523178722), (1000.0, 2034.5464280380316)];
        for (t, expected) in frozen {
            let oracle = theta_asymptotic(t);
            assert!(
                (oracle - expected).abs() < 1e-6,
                "asymptotic oracle drifted at {t}: {oracle}"
            );
            let exact = theta_rs(t).unwrap();
            assert!((exact - expected).abs() < 1e-8, "theta({t}) = {exact}");
        }
        for t in [50.0, 75.0, 200.0, 700.0, 5000.0] {
            assert!((theta_rs(t).unwrap() - theta_asymptotic(t)).abs() < 1e-6);
        }
    }

    #[test]
    fn first_positive_zero() {
        // Bisect theta on [17, 18.5]; it is increasing there.
        let (mut lo, mut hi) = (17.0, 18.5);
        assert!(theta_rs(lo).unwrap() < 0.0 && theta_rs(hi).unwrap() > 0.0);
        for _ in 0..50 {
            let mid = 0.5 * (lo + hi);
            if theta_rs(mid).unwrap() < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let root = 0.5 * (lo + hi);
        assert!((root - 17.845599540410861).abs() < 1e-7, "root = {root}");
    }

    #[test]
    fn negative_at_low_heights() {
        let th = theta_rs(3.0).unwrap();
        assert!((th + 2.9945646960108252).abs() < 1e-9, "theta(3) = {th}");
    }

    #[test]
    fn rejects_below_one() {
        assert!(theta_rs(0.5).is_err());
    }
}
