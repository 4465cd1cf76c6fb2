//! Acceptance suite: one test per criterion, each printing a pass line.
//! Run with `cargo test --test acceptance -- --nocapture` to see them.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;
use zetarg::bounds::{
    backlund_bound, backlund_slope, backlund_slope_eta_limit, rosser_bound, small_radius_coeffs,
    small_radius_slope, BoundParams,
};
use zetarg::critline::{CriticalLineBound, MAX_CHENG_GRAHAM_DELTA};
use zetarg::optimize::{build_table, crossover_height, default_heights};
use zetarg::refvals::REF_TABLE;
use zetarg::specfun::{zeta_real, EvalAccuracy};
use zetarg::strip::{strip_bound_left, strip_bound_right, StripBoundParams};
use zetarg::verify::{check_bounds_empirically, check_lemmas, scan_zeros, ZeroScanResult};

fn pass(name: &str) {
    println!("acceptance {name}: PASS");
}

fn scan_1000() -> &'static ZeroScanResult {
    static SCAN: OnceLock<ZeroScanResult> = OnceLock::new();
    SCAN.get_or_init(|| scan_zeros(1000.0).expect("scan to 1000"))
}

/// Rosser's closed form reproduces the printed column at all eight
/// heights: slope within 5e-4, total within 5e-3.
#[test]
fn criterion_01_rosser_column() {
    for row in &REF_TABLE {
        let bound = rosser_bound(row.t0).unwrap();
        let total = bound.value_at(row.t0).unwrap();
        assert!(
            (bound.b - row.rosser_b).abs() <= 5e-4,
            "b at {:e}: {} vs {}",
            row.t0,
            bound.b,
            row.rosser_b
        );
        assert!(
            (total - row.rosser_total).abs() <= 5e-3,
            "total at {:e}: {total} vs {}",
            row.t0,
            row.rosser_total
        );
    }
    pass("01 rosser-column");
}

/// The eta -> 0 slope limits at the three exponents of interest.
#[test]
fn criterion_02_asymptotic_slopes() {
    let quarter = backlund_slope_eta_limit(0.25).unwrap();
    assert!((quarter - 0.11480).abs() <= 5e-4, "{quarter}");
    let sixth = backlund_slope_eta_limit(1.0 / 6.0).unwrap();
    assert!((sixth - 0.10275).abs() <= 5e-4, "{sixth}");
    let huxley = backlund_slope_eta_limit(32.0 / 205.0).unwrap();
    assert!((huxley - 0.10122).abs() <= 1e-3, "{huxley}");
    assert!(huxley <= 0.1013, "{huxley}");
    pass("02 asymptotic-slopes");
}

/// Every printed slope in both certificate columns is reachable by a
/// feasible parameter choice, to 5e-4.
#[test]
fn criterion_03_slope_column_existence() {
    let ln2_2pi = 2.0 * PI * std::f64::consts::LN_2;
    let theta_weight = 1.0 + PI / 3.0 - 3f64.sqrt();
    let eta_weight = 3f64.sqrt() - PI / 3.0;
    // Left column: theta = 1/4, invert for eta.
    for row in &REF_TABLE {
        let eta = (ln2_2pi * row.conv_b - 0.5 * theta_weight - 0.5 * eta_weight) / eta_weight;
        assert!(eta > 0.0 && eta <= 0.5, "eta {eta} infeasible at {:e}", row.t0);
        let slope = backlund_slope(eta, 0.25).unwrap();
        assert!((slope - row.conv_b).abs() <= 5e-4);
    }
    // Right column: theta = 1/6 + delta, search the delta grid and invert
    // for eta at each point.
    for row in &REF_TABLE {
        let mut found = false;
        for i in 0..=200 {
            let delta = 1e-6
                * (MAX_CHENG_GRAHAM_DELTA / 1e-6).powf(i as f64 / 200.0);
            let theta = 1.0 / 6.0 + delta;
            let eta = (ln2_2pi * row.subconv_b - 2.0 * theta * theta_weight
                - 0.5 * eta_weight)
                / eta_weight;
            if eta > 0.0 && eta <= 0.5 {
                let slope = backlund_slope(eta, theta).unwrap();
                if (slope - row.subconv_b).abs() <= 5e-4 {
                    found = true;
                    break;
                }
            }
        }
        assert!(found, "no (delta, eta) reaches b = {} at {:e}", row.subconv_b, row.t0);
    }
    pass("03 slope-column-existence");
}

/// The comparison report exists for all eight published rows and the
/// computed totals grow with height. Exact total reproduction is not
/// asserted: the published per-row parameter choices are unrecorded, so
/// the deltas are data, not errors.
#[test]
fn criterion_04_table_totals() {
    let rows = build_table(&default_heights()).unwrap();
    assert_eq!(rows.len(), 8);
    for row in &rows {
        assert!(row.reference.is_some(), "missing reference at {:e}", row.t0);
        let deltas = row.deltas().unwrap();
        println!(
            "  t0 = {:e}: conv total {:.4} (ref {:.3}, delta {:+.3}), subconv total {:.4} (ref {:.3}, delta {:+.3})",
            row.t0,
            row.conv_total,
            row.reference.unwrap().conv_total,
            deltas[3],
            row.subconv_total,
            row.reference.unwrap().subconv_total,
            deltas[5],
        );
    }
    for pair in rows.windows(2) {
        assert!(pair[0].rosser_total <= pair[1].rosser_total);
        assert!(pair[0].conv_total <= pair[1].conv_total);
        assert!(pair[0].subconv_total <= pair[1].subconv_total);
    }
    pass("04 table-totals");
}

/// The optimized-slope crossover sits within an order of magnitude of the
/// published claim (past 10^26).
#[test]
fn criterion_05_crossover() {
    let t_star = crossover_height(1e20, 1e32).unwrap();
    let log10 = t_star.log10();
    assert!(
        (24.0..=28.0).contains(&log10),
        "crossover at log10 = {log10}"
    );
    println!("  crossover log10 T* = {log10:.3} (published claim: 26)");
    pass("05 crossover");
}

/// At the convexity exponent the small-radius slope never beats the
/// reflected-method slope: min over a 50-point r-grid of a5/(pi log r)
/// stays above b(eta, 1/4) for every eta on a 20-point grid.
#[test]
fn criterion_06_small_radius_never_wins_at_convexity() {
    for j in 0..20 {
        let eta = 1e-6 + (0.5 - 1e-6) * (j as f64) / 19.0;
        let b = backlund_slope(eta, 0.25).unwrap();
        let mut min_slope = f64::INFINITY;
        for i in 0..50 {
            let r = 1.01 + (1.99 - 1.01) * (i as f64) / 49.0;
            let coeffs = small_radius_coeffs(r, 0.25, eta, 1e10).unwrap();
            min_slope = min_slope.min(small_radius_slope(&coeffs));
        }
        assert!(
            min_slope >= b,
            "small radius wins at eta = {eta}: {min_slope} < {b}"
        );
    }
    pass("06 small-radius-never-wins-at-convexity");
}

/// Special-function ground truth: zeta closed forms, the first zero, and
/// the zero counts at 100 and 1000.
#[test]
fn criterion_07_special_functions() {
    let z2 = zeta_real(2.0, &EvalAccuracy::real_default()).unwrap();
    assert!((z2 - PI * PI / 6.0).abs() <= 1e-12, "{z2}");
    let z15 = zeta_real(1.5, &EvalAccuracy::real_default()).unwrap();
    assert!((z15 - 2.612375348685).abs() <= 1e-9, "{z15}");
    let scan = scan_1000();
    let first = scan.sign_change_ordinates[0];
    assert!((first - 14.134725).abs() <= 1e-4, "{first}");
    let below_100 = scan
        .sign_change_ordinates
        .partition_point(|&o| o <= 100.0);
    assert_eq!(below_100, 29);
    assert_eq!(scan.zero_count, 649);
    pass("07 special-functions");
}

/// No violations of Rosser's bound (t0 = 3) or a reflected-method bound
/// (eta = 0.351, convexity certificate) against directly computed S(t)
/// over 2000 samples of [4, 1000].
#[test]
fn criterion_08_empirical_bound_validity() {
    let scan = scan_1000();
    let rosser = rosser_bound(3.0).unwrap();
    let backlund = backlund_bound(
        &BoundParams::new(0.351, 3.001, CriticalLineBound::convexity()).unwrap(),
    )
    .unwrap();
    let report =
        check_bounds_empirically(scan, 4.0, 1000.0, &[rosser, backlund], 2000).unwrap();
    assert!(
        report.violations.is_empty(),
        "violations: {:?}",
        report.violations
    );
    assert!(
        report.max_abs_s > 0.5 && report.max_abs_s < 1.5,
        "max |S| = {} at t = {}",
        report.max_abs_s,
        report.argmax_t
    );
    println!(
        "  max |S| on [4, 1000] = {:.4} at t = {:.3}",
        report.max_abs_s, report.argmax_t
    );
    pass("08 empirical-bound-validity");
}

/// The four domination families all hold with nonnegative margins on 500
/// seeded samples.
#[test]
fn criterion_09_lemma_domination() {
    let report = check_lemmas(500, 42).unwrap();
    assert_eq!(report.families.len(), 4);
    for family in &report.families {
        assert!(
            family.pass && family.worst_margin >= 0.0,
            "{} failed with margin {} at {}",
            family.name,
            family.worst_margin,
            family.worst_at
        );
        println!(
            "  {}: worst margin {:+.6e} at s = {}",
            family.name, family.worst_margin, family.worst_at
        );
    }
    pass("09 lemma-domination");
}

/// Endpoint identities of the strip bounds, to 1e-12 relative on a 5x5
/// (eta, t) grid.
#[test]
fn criterion_10_endpoint_identities() {
    let etas = [0.1, 0.2, 0.3, 0.4, 0.5];
    let heights = [2e3, 5e3, 1e4, 1e5, 1e6];
    for &eta in &etas {
        let params =
            StripBoundParams::new(eta, 1e3, CriticalLineBound::convexity()).unwrap();
        let zeta = zeta_real(1.0 + eta, &EvalAccuracy::real_default()).unwrap();
        for &t in &heights {
            let right = strip_bound_right(&params, Complex64::new(1.0 + eta, t)).unwrap();
            let want = params.c1() * zeta;
            assert!(
                (right / want - 1.0).abs() <= 1e-12,
                "right endpoint at eta = {eta}, t = {t}"
            );
            let left = strip_bound_left(&params, Complex64::new(0.5, t)).unwrap();
            let want = 2.53 * (params.c2() * t).powf(0.25);
            assert!(
                (left / want - 1.0).abs() <= 1e-12,
                "left endpoint at eta = {eta}, t = {t}"
            );
        }
    }
    pass("10 endpoint-identities");
}
