//! Desk-scale ground truth: count critical-line zeros by sign changes of
//! Z, compute S(t) directly from the counting function, and check every
//! implemented bound and lemma against actual zeta values.

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::f64::consts::{E, PI};

use crate::bounds::LinearBound;
use crate::critline::{cheng_graham_raw, CriticalLineBound};
use crate::error::{Error, Result};
use crate::specfun::{log_gamma, theta_rs, z_function, zeta_complex, zeta_real, EvalAccuracy};
use crate::strip::{gamma_ratio_bound, strip_bound_left, strip_bound_right, StripBoundParams};

/// Highest supported scan height; the mean zero gap there is ~0.94, so the
/// default grid comfortably resolves neighbours.
pub const MAX_SCAN_HEIGHT: f64 = 5000.0;
pub const DEFAULT_GRID_STEP: f64 = 0.05;

/// Sub-interval width for the stitched scan; each chunk is independent of
/// the others except for the shared boundary sample.
const CHUNK_WIDTH: f64 = 100.0;

/// |Z| threshold below which an interval without a sign change is flagged
/// as a possible close pair.
const LOW_MODULUS: f64 = 1e-3;

/// Result of a sign-change scan of Z on [0, t_max].
#[derive(Debug, Clone, Serialize)]
pub struct ZeroScanResult {
    pub t_max: f64,
    pub zero_count: usize,
    /// Bisection-refined ordinates, strictly increasing.
    pub sign_change_ordinates: Vec<f64>,
    /// Intervals where the scan may have missed a pair of zeros.
    pub suspicious_gaps: Vec<(f64, f64)>,
}

/// An S(t) sample tied to the scan that produced its zero count.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SEvaluation {
    pub t: f64,
    pub n_of_t: usize,
    pub theta_over_pi: f64,
    pub s_of_t: f64,
    /// True when t landed on a scanned ordinate and the midpoint
    /// convention (average of the one-sided values) was applied.
    pub at_ordinate: bool,
}

/// Scan with the default grid step.
pub fn scan_zeros(t_max: f64) -> Result<ZeroScanResult> {
    scan_zeros_with_step(t_max, DEFAULT_GRID_STEP)
}

pub fn scan_zeros_with_step(t_max: f64, grid_step: f64) -> Result<ZeroScanResult> {
    if !(t_max > 0.0 && t_max <= MAX_SCAN_HEIGHT) {
        return Err(Error::domain(format!(
            "scan supports t_max in (0, {MAX_SCAN_HEIGHT}], got {t_max}"
        )));
    }
    if !(grid_step > 0.0) {
        return Err(Error::domain(format!(
            "grid step must be positive, got {grid_step}"
        )));
    }
    let acc = EvalAccuracy::z_default();
    let z = |t: f64| z_function(t, &acc);

    let mut ordinates = Vec::new();
    let mut suspicious: Vec<(f64, f64)> = Vec::new();

    let mut prev_t = 0.0f64;
    let mut prev_z = z(0.0)?;
    let mut low_run_start: Option<f64> = None;
    let mut chunk_start = 0.0f64;
    let mut next_checkpoint = CHUNK_WIDTH;
    let total_steps = (t_max / grid_step).ceil() as usize;
    for i in 1..=total_steps {
        let t = (grid_step * i as f64).min(t_max);
        let zt = z(t)?;
        if sign_changed(prev_z, zt) {
            ordinates.push(refine_sign_change(&z, prev_t, t)?);
            low_run_start = None;
        } else if zt.abs() < LOW_MODULUS && prev_z.abs() < LOW_MODULUS {
            // A stretch where |Z| hugs zero without crossing: possible
            // close pair (Lehmer-style); flag rather than claim.
            let start = *low_run_start.get_or_insert(prev_t);
            match suspicious.last_mut() {
                Some((s, end)) if *s == start => *end = t,
                _ => suspicious.push((start, t)),
            }
        } else {
            low_run_start = None;
        }
        // Stitch check at sub-interval boundaries: the count so far
        // against the main term. S(t) stays near zero at desk heights, so
        // a drift of two or more means the grid lost a pair.
        if t >= next_checkpoint || i == total_steps {
            if t >= 50.0 {
                let expected = theta_rs(t)? / PI + 1.0;
                if (ordinates.len() as f64 - expected).abs() >= 2.0 {
                    suspicious.push((chunk_start, t));
                }
            }
            chunk_start = t;
            next_checkpoint += CHUNK_WIDTH;
        }
        prev_t = t;
        prev_z = zt;
    }

    Ok(ZeroScanResult {
        t_max,
        zero_count: ordinates.len(),
        sign_change_ordinates: ordinates,
        suspicious_gaps: suspicious,
    })
}

fn sign_changed(a: f64, b: f64) -> bool {
    (a > 0.0 && b < 0.0) || (a < 0.0 && b > 0.0) || (a != 0.0 && b == 0.0)
}

fn refine_sign_change(
    z: &dyn Fn(f64) -> Result<f64>,
    mut lo: f64,
    mut hi: f64,
) -> Result<f64> {
    let mut z_lo = z(lo)?;
    for _ in 0..40 {
        if hi - lo < 1e-7 {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let z_mid = z(mid)?;
        if z_mid == 0.0 {
            return Ok(mid);
        }
        if (z_lo > 0.0) == (z_mid > 0.0) {
            lo = mid;
            z_lo = z_mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// S(t) = N(t) - 1 - theta(t)/pi from a scan covering t. Off ordinates the
/// identity is exact by construction; within 1e-6 of a scanned ordinate
/// the midpoint convention applies (the reported value averages the
/// one-sided limits, i.e. drops by 1/2).
pub fn s_of_t(t: f64, scan: &ZeroScanResult) -> Result<SEvaluation> {
    if !(3.0..=MAX_SCAN_HEIGHT).contains(&t) {
        return Err(Error::domain(format!(
            "s_of_t supports t in [3, {MAX_SCAN_HEIGHT}], got {t}"
        )));
    }
    if scan.t_max < t {
        return Err(Error::domain(format!(
            "scan covers only [0, {}], asked at {t}",
            scan.t_max
        )));
    }
    let n_of_t = scan
        .sign_change_ordinates
        .partition_point(|&ordinate| ordinate <= t);
    let at_ordinate = nearest_ordinate_within(scan, t, 1e-6);
    let theta_over_pi = theta_rs(t)? / PI;
    let adjustment = if at_ordinate { 0.5 } else { 0.0 };
    Ok(SEvaluation {
        t,
        n_of_t,
        theta_over_pi,
        s_of_t: n_of_t as f64 - adjustment - 1.0 - theta_over_pi,
        at_ordinate,
    })
}

fn nearest_ordinate_within(scan: &ZeroScanResult, t: f64, tol: f64) -> bool {
    let idx = scan.sign_change_ordinates.partition_point(|&o| o < t);
    let mut near = false;
    if idx < scan.sign_change_ordinates.len() {
        near |= (scan.sign_change_ordinates[idx] - t).abs() <= tol;
    }
    if idx > 0 {
        near |= (t - scan.sign_change_ordinates[idx - 1]).abs() <= tol;
    }
    near
}

/// One sample exceeding a bound.
#[derive(Debug, Clone, Serialize)]
pub struct BoundViolation {
    pub t: f64,
    pub s_value: f64,
    pub bound_value: f64,
    pub bound_index: usize,
}

/// Outcome of sampling |S(t)| against a set of linear bounds.
#[derive(Debug, Clone, Serialize)]
pub struct BoundCheckReport {
    pub t_lo: f64,
    pub t_hi: f64,
    pub samples: usize,
    pub max_abs_s: f64,
    pub argmax_t: f64,
    pub violations: Vec<BoundViolation>,
}

/// Sample |S(t)| at equally spaced points of [t_lo, t_hi] (nudged off
/// scanned ordinates) and compare against each bound. Violations are data,
/// not errors.
pub fn check_bounds_empirically(
    scan: &ZeroScanResult,
    t_lo: f64,
    t_hi: f64,
    bounds: &[LinearBound],
    samples: usize,
) -> Result<BoundCheckReport> {
    if !(t_lo >= 3.0 && t_hi > t_lo && t_hi <= MAX_SCAN_HEIGHT) {
        return Err(Error::domain(format!(
            "bound check supports 3 <= t_lo < t_hi <= {MAX_SCAN_HEIGHT}, got [{t_lo}, {t_hi}]"
        )));
    }
    if scan.t_max < t_hi {
        return Err(Error::domain(format!(
            "scan covers only [0, {}], check needs {t_hi}",
            scan.t_max
        )));
    }
    if samples == 0 {
        return Err(Error::domain("need at least one sample".to_string()));
    }
    for bound in bounds {
        if bound.t0 > t_lo {
            return Err(Error::domain(format!(
                "bound asserted from {} cannot be checked from {t_lo}",
                bound.t0
            )));
        }
    }
    let mut max_abs_s = 0.0f64;
    let mut argmax_t = t_lo;
    let mut violations = Vec::new();
    for j in 0..samples {
        let mut t = t_lo + (t_hi - t_lo) * (j as f64 + 0.5) / samples as f64;
        if nearest_ordinate_within(scan, t, 1e-6) {
            t += 2e-6;
        }
        let s = s_of_t(t, scan)?;
        if s.s_of_t.abs() > max_abs_s {
            max_abs_s = s.s_of_t.abs();
            argmax_t = t;
        }
        for (bound_index, bound) in bounds.iter().enumerate() {
            let limit = bound.value_at(t)?;
            if s.s_of_t.abs() > limit {
                violations.push(BoundViolation {
                    t,
                    s_value: s.s_of_t,
                    bound_value: limit,
                    bound_index,
                });
            }
        }
    }
    Ok(BoundCheckReport {
        t_lo,
        t_hi,
        samples,
        max_abs_s,
        argmax_t,
        violations,
    })
}

/// Result of one random-sample domination family.
#[derive(Debug, Clone, Serialize)]
pub struct LemmaFamilyResult {
    pub name: String,
    pub samples: usize,
    /// Smallest observed (bound - value); nonnegative means the family
    /// held everywhere.
    pub worst_margin: f64,
    pub worst_at: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct LemmaCheckReport {
    pub seed: u64,
    pub families: Vec<LemmaFamilyResult>,
    pub all_pass: bool,
}

/// Random-sample domination checks of the supporting estimates:
/// the Gamma-ratio bound, both strip bounds, the Euler-product lower
/// bound, and the raw subconvexity bound on the critical line.
pub fn check_lemmas(samples: usize, seed: u64) -> Result<LemmaCheckReport> {
    if samples == 0 {
        return Err(Error::domain("need at least one sample".to_string()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let acc = EvalAccuracy::complex_default();

    let mut families = Vec::new();

    // (i) Gamma-ratio estimate on the reflection strip.
    {
        let mut worst = f64::INFINITY;
        let mut worst_at = String::new();
        for _ in 0..samples {
            let sigma = rng.gen_range(-0.5..=0.5);
            let t = rng.gen_range(1.0..=100.0) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
            let s = Complex64::new(sigma, t);
            let bound = gamma_ratio_bound(s)?;
            let truth = gamma_ratio_truth(s);
            track_worst(&mut worst, &mut worst_at, bound - truth, s);
        }
        families.push(family("gamma-ratio", samples, worst, worst_at));
    }

    // (ii) Strip bounds on both sides of the critical line.
    {
        let t0 = 100.0;
        let mut worst = f64::INFINITY;
        let mut worst_at = String::new();
        for _ in 0..samples {
            let eta = rng.gen_range(0.001..=0.5);
            let params = StripBoundParams::new(eta, t0, CriticalLineBound::convexity())?;
            let t = rng.gen_range(t0 + 1e-6..=4.0 * t0);
            let right_sigma = rng.gen_range(0.5..=1.0 + eta);
            let s = Complex64::new(right_sigma, t);
            let margin = strip_bound_right(&params, s)? - zeta_complex(s, &acc)?.norm();
            track_worst(&mut worst, &mut worst_at, margin, s);
            let left_sigma = rng.gen_range(-eta..=0.5);
            let s = Complex64::new(left_sigma, t);
            let margin = strip_bound_left(&params, s)? - zeta_complex(s, &acc)?.norm();
            track_worst(&mut worst, &mut worst_at, margin, s);
        }
        families.push(family("strip-bounds", samples, worst, worst_at));
    }

    // (iii) Euler-product lower bound for sigma > 1.
    {
        let racc = EvalAccuracy::real_default();
        let mut worst = f64::INFINITY;
        let mut worst_at = String::new();
        for _ in 0..samples {
            let sigma = rng.gen_range(1.05..=3.0);
            let t = rng.gen_range(0.0..=100.0);
            let s = Complex64::new(sigma, t);
            let floor = zeta_real(2.0 * sigma, &racc)? / zeta_real(sigma, &racc)?;
            let margin = zeta_complex(s, &acc)?.norm() - floor;
            track_worst(&mut worst, &mut worst_at, margin, s);
        }
        families.push(family("euler-product", samples, worst, worst_at));
    }

    // (iv) The raw subconvexity bound on the critical line.
    {
        let mut worst = f64::INFINITY;
        let mut worst_at = String::new();
        for _ in 0..samples {
            let t = rng.gen_range(E + 1e-6..=2000.0);
            let s = Complex64::new(0.5, t);
            let margin = cheng_graham_raw(t)? - zeta_complex(s, &acc)?.norm();
            track_worst(&mut worst, &mut worst_at, margin, s);
        }
        families.push(family("critical-line-raw", samples, worst, worst_at));
    }

    let all_pass = families.iter().all(|f| f.pass);
    Ok(LemmaCheckReport {
        seed,
        families,
        all_pass,
    })
}

fn family(name: &str, samples: usize, worst: f64, worst_at: String) -> LemmaFamilyResult {
    LemmaFamilyResult {
        name: name.to_string(),
        samples,
        worst_margin: worst,
        worst_at,
        pass: worst >= 0.0,
    }
}

fn track_worst(worst: &mut f64, worst_at: &mut String, margin: f64, s: Complex64) {
    if margin < *worst {
        *worst = margin;
        *worst_at = format!("{:.6}{:+.6}i", s.re, s.im);
    }
}

/// |Gamma((1-s)/2) / Gamma(s/2)|, reflecting the denominator into the
/// right half-plane when necessary.
fn gamma_ratio_truth(s: Complex64) -> f64 {
    let num = abs_gamma((Complex64::new(1.0, 0.0) - s) / 2.0);
    let den = abs_gamma(s / 2.0);
    num / den
}

fn abs_gamma(w: Complex64) -> f64 {
    if w.re > 0.0 {
        log_gamma(w).expect("right half-plane").re.exp()
    } else {
        PI / ((PI * w).sin().norm() * abs_gamma(Complex64::new(1.0, 0.0) - w))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::rosser_bound;

    fn scan_to_100() -> ZeroScanResult {
        scan_zeros(100.0).unwrap()
    }

    #[test]
    fn counts_to_one_hundred() {
        let scan = scan_to_100();
        assert_eq!(scan.zero_count, 29);
        assert!(scan.suspicious_gaps.is_empty());
        let first = scan.sign_change_ordinates[0];
        assert!((first - 14.134725141734694).abs() < 1e-4, "{first}");
        for pair in scan.sign_change_ordinates.windows(2) {
            assert!(pair[0] < pair[1]);
        }
    }

    #[test]
    fn counts_to_fifteen() {
        let scan = scan_zeros(15.0).unwrap();
        assert_eq!(scan.zero_count, 1);
        assert!((scan.sign_change_ordinates[0] - 14.134725141734694).abs() < 1e-4);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(scan_zeros(6000.0).is_err());
        assert!(scan_zeros(0.0).is_err());
        assert!(scan_zeros_with_step(100.0, 0.0).is_err());
    }

    #[test]
    fn s_values_track_the_counting_function() {
        let scan = scan_to_100();
        let s100 = s_of_t(100.0, &scan).unwrap();
        assert_eq!(s100.n_of_t, 29);
        // Frozen from 29 - 1 - theta(100)/pi.
        assert!((s100.s_of_t + 0.00240990227181678).abs() < 1e-9, "{}", s100.s_of_t);
        assert!(!s100.at_ordinate);
        // Exactness of the defining identity off ordinates.
        assert_eq!(
            s100.s_of_t,
            s100.n_of_t as f64 - 1.0 - s100.theta_over_pi
        );
        let s3 = s_of_t(3.0, &scan).unwrap();
        assert_eq!(s3.n_of_t, 0);
        assert!(s3.theta_over_pi < 0.0);
        assert!((s3.s_of_t - (-1.0 - s3.theta_over_pi)).abs() < 1e-15);
    }

    #[test]
    fn s_jumps_by_one_at_the_first_zero() {
        let scan = scan_to_100();
        let gamma1 = scan.sign_change_ordinates[0];
        let below = s_of_t(gamma1 - 1e-4, &scan).unwrap();
        let above = s_of_t(gamma1 + 1e-4, &scan).unwrap();
        assert!(below.s_of_t > -1.0 && below.s_of_t < 0.0, "{}", below.s_of_t);
        assert!((above.s_of_t - below.s_of_t - 1.0).abs() < 1e-3);
        // Midpoint convention at the ordinate itself.
        let at = s_of_t(gamma1, &scan).unwrap();
        assert!(at.at_ordinate);
        let average = 0.5 * (below.s_of_t + above.s_of_t);
        assert!((at.s_of_t - average).abs() < 1e-3, "{} vs {average}", at.s_of_t);
    }

    #[test]
    fn s_decreases_between_ordinates() {
        let scan = scan_to_100();
        // theta is increasing past its stationary point, so S falls
        // strictly between consecutive ordinates.
        let (lo, hi) = (
            scan.sign_change_ordinates[5] + 1e-3,
            scan.sign_change_ordinates[6] - 1e-3,
        );
        let mut prev = f64::INFINITY;
        for i in 0..10 {
            let t = lo + (hi - lo) * (i as f64) / 9.0;
            let s = s_of_t(t, &scan).unwrap();
            assert!(s.s_of_t < prev);
            prev = s.s_of_t;
        }
    }

    #[test]
    fn no_rosser_violations_below_one_hundred() {
        let scan = scan_to_100();
        let bound = rosser_bound(3.0).unwrap();
        let report = check_bounds_empirically(&scan, 3.0, 100.0, &[bound], 500).unwrap();
        assert!(report.violations.is_empty());
        assert!(report.max_abs_s > 0.1 && report.max_abs_s < 1.5);
    }

    #[test]
    fn lemma_families_hold_on_a_small_run() {
        let report = check_lemmas(60, 42).unwrap();
        assert_eq!(report.families.len(), 4);
        assert!(report.all_pass, "{:?}", report.families);
    }

    #[test]
    fn lemma_report_is_deterministic() {
        let a = check_lemmas(25, 7).unwrap();
        let b = check_lemmas(25, 7).unwrap();
        let ja = serde_json::to_string(&a).unwrap();
        let jb = serde_json::to_string(&b).unwrap();
        assert_eq!(ja, jb);
    }

    #[test]
    fn zero_count_tracks_the_main_term() {
        for t_max in [50.0, 120.0, 300.0] {
            let scan = scan_zeros(t_max).unwrap();
            let expected = theta_rs(t_max).unwrap() / PI + 1.0;
            assert!(
                (scan.zero_count as f64 - expected).abs() < 3.0,
                "count {} vs main term {expected} at {t_max}",
                scan.zero_count
            );
        }
    }
}
