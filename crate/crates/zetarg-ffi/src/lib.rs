//! C ABI over the zetarg library: status codes in, doubles out, with one
//! opaque handle for zero-scan results.
//!
//! Conventions: every function returns a [`ZgStatus`]; results land in
//! caller-supplied out-pointers, which are written only on `ZG_STATUS_OK`.
//! The scan handle from [`zg_scan_new`] must be released with
//! [`zg_scan_free`]. No function panics across the boundary.

use std::os::raw::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};

use zetarg::bounds::{
    backlund_bound, backlund_slope, backlund_slope_eta_limit, rosser_bound, BoundParams,
};
use zetarg::critline::CriticalLineBound;
use zetarg::error::Error;
use zetarg::optimize::{crossover_height, minimize_bound, OptimizeMode};
use zetarg::specfun::{theta_rs, z_function, zeta_real, EvalAccuracy};
use zetarg::verify::{s_of_t, scan_zeros_with_step, ZeroScanResult, DEFAULT_GRID_STEP};

/// Status of a call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZgStatus {
    Ok = 0,
    DomainError = 1,
    AccuracyError = 2,
    CoefficientOnly = 3,
    NoSignChange = 4,
    NullArgument = 5,
    Panic = 6,
}

/// Certificate family selector.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZgCertMode {
    Convexity = 0,
    ChengGraham = 1,
}

/// Result of a parameter search.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct ZgOptimum {
    pub best_eta: f64,
    /// NaN in convexity mode.
    pub best_delta: f64,
    pub a: f64,
    pub b: f64,
    pub total_at_t0: f64,
}

/// Opaque zero-scan handle.
pub struct ZgScan {
    inner: ZeroScanResult,
}

fn status_of(err: &Error) -> ZgStatus {
    match err {
        Error::Domain(_) => ZgStatus::DomainError,
        Error::Accuracy(_) => ZgStatus::AccuracyError,
        Error::CoefficientOnly => ZgStatus::CoefficientOnly,
        Error::NoSignChange { .. } => ZgStatus::NoSignChange,
    }
}

fn write_out<T>(out: *mut T, compute: impl FnOnce() -> Result<T, Error>) -> ZgStatus {
    if out.is_null() {
        return ZgStatus::NullArgument;
    }
    match catch_unwind(AssertUnwindSafe(compute)) {
        Ok(Ok(value)) => {
            unsafe { out.write(value) };
            ZgStatus::Ok
        }
        Ok(Err(err)) => status_of(&err),
        Err(_) => ZgStatus::Panic,
    }
}

fn cert_for(mode: ZgCertMode, delta: f64) -> Result<CriticalLineBound, Error> {
    match mode {
        ZgCertMode::Convexity => Ok(CriticalLineBound::convexity()),
        ZgCertMode::ChengGraham => CriticalLineBound::cheng_graham(delta),
    }
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn zg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// zeta(sigma) for sigma > 1.
///
/// # Safety
/// Out-pointers must be valid for a write (or NULL, which is reported).
#[no_mangle]
pub unsafe extern "C" fn zg_zeta_real(sigma: f64, out: *mut f64) -> ZgStatus {
    write_out(out, || zeta_real(sigma, &EvalAccuracy::real_default()))
}

/// Riemann-Siegel theta(t) for t >= 1.
///
/// # Safety
/// Out-pointers must be valid for a write (or NULL, which is reported).
#[no_mangle]
pub unsafe extern "C" fn zg_theta_rs(t: f64, out: *mut f64) -> ZgStatus {
    write_out(out, || theta_rs(t))
}

/// Hardy's Z(t) for t >= 0.
///
/// # Safety
/// Out-pointers must be valid for a write (or NULL, which is reported).
#[no_mangle]
pub unsafe extern "C" fn zg_z_function(t: f64, out: *mut f64) -> ZgStatus {
    write_out(out, || z_function(t, &EvalAccuracy::z_default()))
}

/// Rosser's benchmark bound at t0 >= 3: writes the pair (a, b) of
/// |S(T)| <= a + b log T.
///
/// # Safety
/// Out-pointers must be valid for a write (or NULL, which is reported).
#[no_mangle]
pub unsafe extern "C" fn zg_rosser_bound(t0: f64, out_a: *mut f64, out_b: *mut f64) -> ZgStatus {
    if out_a.is_null() {
        return ZgStatus::NullArgument;
    }
    write_out(out_b, || {
        let bound = rosser_bound(t0)?;
        unsafe { out_a.write(bound.a) };
        Ok(bound.b)
    })
}

/// The Backlund-method bound for explicit parameters. `delta` is read only
/// in Cheng-Graham mode.
///
/// # Safety
/// Out-pointers must be valid for a write (or NULL, which is reported).
#[no_mangle]
pub unsafe extern "C" fn zg_backlund_bound(
    eta: f64,
    t0: f64,
    mode: ZgCertMode,
    delta: f64,
    out_a: *mut f64,
    out_b: *mut f64,
) -> ZgStatus {
    if out_a.is_null() {
        return ZgStatus::NullArgument;
    }
    write_out(out_b, || {
        let cert = cert_for(mode, delta)?;
        let bound = backlund_bound(&BoundParams::new(eta, t0, cert)?)?;
        unsafe { out_a.write(bound.a) };
        Ok(bound.b)
    })
}

/// The slope b(eta, theta) alone.
///
/// # Safety
/// Out-pointers must be valid for a write (or NULL, which is reported).
#[no_mangle]
pub unsafe extern "C" fn zg_backlund_slope(eta: f64, theta: f64, out: *mut f64) -> ZgStatus {
    write_out(out, || backlund_slope(eta, theta))
}

/// The eta -> 0 limit of the slope for a given critical-line exponent.
///
/// # Safety
/// Out-pointers must be valid for a write (or NULL, which is reported).
#[no_mangle]
pub unsafe extern "C" fn zg_backlund_slope_limit(theta: f64, out: *mut f64) -> ZgStatus {
    write_out(out, || backlund_slope_eta_limit(theta))
}

/// Minimize a + b log t0 over the free parameters of the given mode.
///
/// # Safety
/// Out-pointers must be valid for a write (or NULL, which is reported).
#[no_mangle]
pub unsafe extern "C" fn zg_minimize(t0: f64, mode: ZgCertMode, out: *mut ZgOptimum) -> ZgStatus {
    write_out(out, || {
        let search = match mode {
            ZgCertMode::Convexity => OptimizeMode::Convexity,
            ZgCertMode::ChengGraham => OptimizeMode::ChengGraham,
        };
        let result = minimize_bound(t0, search)?;
        Ok(ZgOptimum {
            best_eta: result.best_eta,
            best_delta: result.best_delta.unwrap_or(f64::NAN),
            a: result.bound.a,
            b: result.bound.b,
            total_at_t0: result.total_at_t0,
        })
    })
}

/// Height where the subconvexity-optimized slope first beats the
/// convexity-optimized slope, by bisection inside [lo, hi].
///
/// # Safety
/// Out-pointers must be valid for a write (or NULL, which is reported).
#[no_mangle]
pub unsafe extern "C" fn zg_crossover_height(lo: f64, hi: f64, out: *mut f64) -> ZgStatus {
    write_out(out, || crossover_height(lo, hi))
}

/// Scan Z sign changes on [0, t_max]; pass grid_step <= 0 for the default.
/// On success writes a heap handle the caller must release with
/// [`zg_scan_free`].
///
/// # Safety
/// Out-pointers must be valid for a write (or NULL, which is reported).
#[no_mangle]
pub unsafe extern "C" fn zg_scan_new(t_max: f64, grid_step: f64, out: *mut *mut ZgScan) -> ZgStatus {
    write_out(out, || {
        let step = if grid_step > 0.0 {
            grid_step
        } else {
            DEFAULT_GRID_STEP
        };
        let inner = scan_zeros_with_step(t_max, step)?;
        Ok(Box::into_raw(Box::new(ZgScan { inner })))
    })
}

/// Release a scan handle. Passing NULL is a no-op.
///
/// # Safety
/// `scan` must be a pointer previously returned by [`zg_scan_new`] and not
/// yet freed.
#[no_mangle]
pub unsafe extern "C" fn zg_scan_free(scan: *mut ZgScan) {
    if !scan.is_null() {
        drop(Box::from_raw(scan));
    }
}

/// Number of sign-change ordinates found by the scan.
///
/// # Safety
/// `scan` must be a live pointer from [`zg_scan_new`].
#[no_mangle]
pub unsafe extern "C" fn zg_scan_zero_count(scan: *const ZgScan, out: *mut usize) -> ZgStatus {
    if scan.is_null() {
        return ZgStatus::NullArgument;
    }
    let count = (*scan).inner.zero_count;
    write_out(out, || Ok(count))
}

/// The index-th ordinate (0-based, increasing).
///
/// # Safety
/// `scan` must be a live pointer from [`zg_scan_new`].
#[no_mangle]
pub unsafe extern "C" fn zg_scan_ordinate(
    scan: *const ZgScan,
    index: usize,
    out: *mut f64,
) -> ZgStatus {
    if scan.is_null() {
        return ZgStatus::NullArgument;
    }
    let scan = &*scan;
    write_out(out, || {
        scan.inner
            .sign_change_ordinates
            .get(index)
            .copied()
            .ok_or_else(|| Error::Domain(format!("ordinate index {index} out of range")))
    })
}

/// S(t) from a scan covering t; applies the midpoint convention on
/// scanned ordinates.
///
/// # Safety
/// `scan` must be a live pointer from [`zg_scan_new`].
#[no_mangle]
pub unsafe extern "C" fn zg_s_of_t(scan: *const ZgScan, t: f64, out: *mut f64) -> ZgStatus {
    if scan.is_null() {
        return ZgStatus::NullArgument;
    }
    let scan = &*scan;
    write_out(out, || Ok(s_of_t(t, &scan.inner)?.s_of_t))
}
