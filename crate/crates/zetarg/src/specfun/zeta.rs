//! Riemann zeta via Euler-Maclaurin summation with a rigorous remainder
//! bound.
//!
//! The truncation point is chosen from the remainder estimate, not a fixed
//! term count: after summing the first `N` terms and `q` tail corrections,
//! the remainder is bounded by the first omitted correction times
//! |s + 2q + 1| / (sigma + 2q + 1), valid for sigma > -(2q + 1). The number
//! of initial terms grows with |Im s| so that the tail corrections decay
//! geometrically.

use num_complex::Complex64;

use super::tables::EULER_MACLAURIN;
use super::EvalAccuracy;
use crate::error::{Error, Result};

const MAX_INITIAL_TERMS: usize = 4_000_000;
const MAX_TAIL_TERMS: usize = 20;

/// Zeta on the real axis, sigma > 1. The result is always > 1.
pub fn zeta_real(sigma: f64, acc: &EvalAccuracy) -> Result<f64> {
    if !sigma.is_finite() || sigma <= 1.0 {
        return Err(Error::domain(format!(
            "zeta_real requires sigma > 1 (pole at 1), got {sigma}"
        )));
    }
    let mut n = initial_terms(0.0, acc);
    loop {
        if let Some(value) = euler_maclaurin_real(sigma, n, acc.abs_tol) {
            return Ok(value);
        }
        n *= 2;
        if n > MAX_INITIAL_TERMS {
            return Err(Error::accuracy(format!(
                "Euler-Maclaurin remainder bound cannot reach {:e} at sigma = {sigma}",
                acc.abs_tol
            )));
        }
    }
}

/// Zeta in the half-plane Re(s) > -1, away from the pole at s = 1.
pub fn zeta_complex(s: Complex64, acc: &EvalAccuracy) -> Result<Complex64> {
    if !s.re.is_finite() || !s.im.is_finite() || s.re <= -1.0 {
        return Err(Error::domain(format!(
            "zeta_complex requires Re(s) > -1, got s = {s}"
        )));
    }
    if (s - Complex64::new(1.0, 0.0)).norm() <= 1e-9 {
        return Err(Error::domain(format!(
            "zeta_complex: s = {s} is too close to the pole at 1"
        )));
    }
    let mut n = initial_terms(s.im.abs(), acc);
    loop {
        if let Some(value) = euler_maclaurin_complex(s, n, acc.abs_tol) {
            return Ok(value);
        }
        n *= 2;
        if n > MAX_INITIAL_TERMS {
            return Err(Error::accuracy(format!(
                "Euler-Maclaurin remainder bound cannot reach {:e} at s = {s}",
                acc.abs_tol
            )));
        }
    }
}

fn initial_terms(t_abs: f64, acc: &EvalAccuracy) -> usize {
    let base = (0.5 * t_abs) as usize + 16;
    base.max(acc.terms_hint.unwrap_or(0))
}

/// One Euler-Maclaurin pass on the real axis. Returns None when the tail
/// remainder bound cannot meet `tol` with the allotted corrections.
fn euler_maclaurin_real(sigma: f64, n: usize, tol: f64) -> Option<f64> {
    let nf = n as f64;
    let mut sum = 0.0;
    for k in 1..n {
        sum += (k as f64).powf(-sigma);
    }
    let n_pow = nf.powf(-sigma);
    sum += 0.5 * n_pow + n_pow * nf / (sigma - 1.0);

    // Tail corrections: coeff_k * N^{1-sigma-2k} * prod_{j=0}^{2k-2}(sigma+j).
    let mut product = sigma;
    let mut power = n_pow / nf; // N^{1-sigma-2k} at k = 1
    let inv_n2 = 1.0 / (nf * nf);
    let mut result = sum;
    for (idx, coeff) in EULER_MACLAURIN.iter().enumerate() {
        let k = idx + 1;
        let term = coeff * product * power;
        // Remainder after k-1 terms is |term| * (s+2k-1)/(sigma+2k-1); on the
        // real axis that factor is 1, so |term| itself bounds what remains.
        if term.abs() <= tol {
            return Some(result);
        }
        result += term;
        if k == MAX_TAIL_TERMS {
            break;
        }
        // Extend the factor product to j = 2k-1, 2k and step the power down.
        product *= (sigma + (2 * k - 1) as f64) * (sigma + (2 * k) as f64);
        power *= inv_n2;
    }
    None
}

fn euler_maclaurin_complex(s: Complex64, n: usize, tol: f64) -> Option<Complex64> {
    let nf = n as f64;
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 1..n {
        sum += (-s * (k as f64).ln()).exp();
    }
    let n_pow = (-s * nf.ln()).exp(); // N^{-s}
    sum += 0.5 * n_pow + n_pow * nf / (s - 1.0);

    let mut product = s;
    let mut power = n_pow / nf; // N^{-s-1}
    let inv_n2 = 1.0 / (nf * nf);
    let mut result = sum;
    for (idx, coeff) in EULER_MACLAURIN.iter().enumerate() {
        let k = idx + 1;
        let term = coeff * product * power;
        let fac_num = (s + Complex64::new((2 * k - 1) as f64, 0.0)).norm();
        let fac_den = s.re + (2 * k - 1) as f64;
        if fac_den > 0.0 && term.norm() * fac_num / fac_den <= tol {
            return Some(result);
        }
        result += term;
        if k == MAX_TAIL_TERMS {
            break;
        }
        product *= (s + Complex64::new((2 * k - 1) as f64, 0.0))
            * (s + Complex64::new((2 * k) as f64, 0.0));
        power *= inv_n2;
    }
    None
}
