#ifndef ZETARG_H
#define ZETARG_H

/* Generated by cbindgen from the zetarg-ffi crate; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Status of a call.
 */
typedef enum ZgStatus {
  ZG_STATUS_OK = 0,
  ZG_STATUS_DOMAIN_ERROR = 1,
  ZG_STATUS_ACCURACY_ERROR = 2,
  ZG_STATUS_COEFFICIENT_ONLY = 3,
  ZG_STATUS_NO_SIGN_CHANGE = 4,
  ZG_STATUS_NULL_ARGUMENT = 5,
  ZG_STATUS_PANIC = 6,
} ZgStatus;

/*
 Certificate family selector.
 */
typedef enum ZgCertMode {
  ZG_CERT_MODE_CONVEXITY = 0,
  ZG_CERT_MODE_CHENG_GRAHAM = 1,
} ZgCertMode;

/*
 Opaque zero-scan handle.
 */
typedef struct ZgScan ZgScan;

/*
 Result of a parameter search.
 */
typedef struct ZgOptimum {
  double best_eta;
  /*
   NaN in convexity mode.
   */
  double best_delta;
  double a;
  double b;
  double total_at_t0;
} ZgOptimum;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Library version as a static NUL-terminated string.
 */
const char *zg_version(void);

/*
 zeta(sigma) for sigma > 1.
 */
enum ZgStatus zg_zeta_real(double sigma, double *out);

/*
 Riemann-Siegel theta(t) for t >= 1.
 */
enum ZgStatus zg_theta_rs(double t, double *out);

/*
 Hardy's Z(t) for t >= 0.
 */
enum ZgStatus zg_z_function(double t, double *out);

/*
 Rosser's benchmark bound at t0 >= 3: writes the pair (a, b) of
 |S(T)| <= a + b log T.
 */
enum ZgStatus zg_rosser_bound(double t0, double *out_a, double *out_b);

/*
 The Backlund-method bound for explicit parameters. `delta` is read only
 in Cheng-Graham mode.
 */
enum ZgStatus zg_backlund_bound(double eta,
                                double t0,
                                enum ZgCertMode mode,
                                double delta,
                                double *out_a,
                                double *out_b);

/*
 The slope b(eta, theta) alone.
 */
enum ZgStatus zg_backlund_slope(double eta, double theta, double *out);

/*
 The eta -> 0 limit of the slope for a given critical-line exponent.
 */
enum ZgStatus zg_backlund_slope_limit(double theta, double *out);

/*
 Minimize a + b log t0 over the free parameters of the given mode.
 */
enum ZgStatus zg_minimize(double t0, enum ZgCertMode mode, struct ZgOptimum *out);

/*
 Height where the subconvexity-optimized slope first beats the
 convexity-optimized slope, by bisection inside [lo, hi].
 */
enum ZgStatus zg_crossover_height(double lo, double hi, double *out);

/*
 Scan Z sign changes on [0, t_max]; pass grid_step <= 0 for the default.
 On success writes a heap handle the caller must release with
 [`zg_scan_free`].
 */
enum ZgStatus zg_scan_new(double t_max, double grid_step, struct ZgScan **out);

/*
 Release a scan handle. Passing NULL is a no-op.

 # Safety
 `scan` must be a pointer previously returned by [`zg_scan_new`] and not
 yet freed.
 */
void zg_scan_free(struct ZgScan *scan);

/*
 Number of sign-change ordinates found by the scan.

 # Safety
 `scan` must be a live pointer from [`zg_scan_new`].
 */
enum ZgStatus zg_scan_zero_count(const struct ZgScan *scan, size_t *out);

/*
 The index-th ordinate (0-based, increasing).

 # Safety
 `scan` must be a live pointer from [`zg_scan_new`].
 */
enum ZgStatus zg_scan_ordinate(const struct ZgScan *scan, size_t index, double *out);

/*
 S(t) from a scan covering t; applies the midpoint convention on
 scanned ordinates.

 # Safety
 `scan` must be a live pointer from [`zg_scan_new`].
 */
enum ZgStatus zg_s_of_t(const struct ZgScan *scan, double t, double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ZETARG_H */
