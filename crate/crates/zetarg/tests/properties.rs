//! Property tests for the algebraic invariants: interpolation
//! log-linearity, endpoint identities, conjugate symmetry, and linearity
//! of the bounds in log T.

use num_complex::Complex64;
use proptest::prelude::*;

use zetarg::bounds::{backlund_slope, rosser_bound};
use zetarg::critline::CriticalLineBound;
use zetarg::specfun::{z_function, zeta_complex, zeta_real, EvalAccuracy};
use zetarg::strip::{pl_interpolate, strip_bound_left, strip_bound_right, LineBoundSpec, StripBoundParams};

proptest! {
    #[test]
    fn interpolation_is_log_linear_in_sigma(
        a in -0.5f64..0.4,
        width in 0.2f64..1.5,
        log_pre_left in -1.0f64..2.0,
        log_pre_right in -1.0f64..2.0,
        alpha_extra in 0.0f64..1.0,
        beta in 0.0f64..1.0,
        t in 5.0f64..500.0,
        split in 0.1f64..0.9,
    ) {
        let b = a + width;
        let left = LineBoundSpec::new(a, log_pre_left.exp(), beta + alpha_extra).unwrap();
        let right = LineBoundSpec::new(b, log_pre_right.exp(), beta).unwrap();
        // Fix |Q + s| across the three evaluation points by adjusting the
        // imaginary part; log of the interpolant must then be affine in
        // sigma, so the midpoint value is the weighted average.
        let modulus = 1.0f64.hypot(t) * 2.0;
        let at = |sigma: f64| {
            let im = (modulus * modulus - (1.0 + sigma) * (1.0 + sigma)).sqrt();
            pl_interpolate(left, right, 1.0, Complex64::new(sigma, im)).unwrap().ln()
        };
        let mid = a + split * width;
        let expected = (1.0 - split) * at(a) + split * at(b);
        prop_assert!((at(mid) - expected).abs() < 1e-12);
    }

    #[test]
    fn strip_endpoint_identities(eta in 0.05f64..0.5, t_factor in 1.5f64..100.0) {
        let params = StripBoundParams::new(eta, 1e3, CriticalLineBound::convexity()).unwrap();
        let t = 1e3 * t_factor;
        let zeta = zeta_real(1.0 + eta, &EvalAccuracy::real_default()).unwrap();
        let right = strip_bound_right(&params, Complex64::new(1.0 + eta, t)).unwrap();
        prop_assert!((right / (params.c1() * zeta) - 1.0).abs() < 1e-12);
        let left = strip_bound_left(&params, Complex64::new(0.5, t)).unwrap();
        prop_assert!((left / (2.53 * (params.c2() * t).powf(0.25)) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn bounds_are_linear_in_log_t(t0 in 10.0f64..1e8, factor in 1.1f64..50.0) {
        let bound = rosser_bound(t0).unwrap();
        let base = bound.value_at(t0).unwrap();
        let stepped = bound.value_at(t0 * factor).unwrap();
        prop_assert!((stepped - base - bound.b * factor.ln()).abs() < 1e-9);
    }

    #[test]
    fn slope_monotone_in_eta_and_theta(
        eta in 0.01f64..0.49,
        theta in 0.01f64..0.24,
        eps in 0.001f64..0.01,
    ) {
        let base = backlund_slope(eta, theta).unwrap();
        prop_assert!(backlund_slope(eta + eps, theta).unwrap() > base);
        prop_assert!(backlund_slope(eta, theta + eps).unwrap() > base);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn zeta_conjugate_symmetry(re in -0.9f64..3.0, im in 0.5f64..60.0) {
        let acc = EvalAccuracy::complex_default();
        let s = Complex64::new(re, im);
        prop_assume!((s - Complex64::new(1.0, 0.0)).norm() > 0.05);
        let upper = zeta_complex(s, &acc).unwrap();
        let lower = zeta_complex(s.conj(), &acc).unwrap();
        prop_assert!((upper.conj() - lower).norm() < 1e-10);
    }

    #[test]
    fn z_matches_zeta_modulus(t in 1.0f64..500.0) {
        // Combined tolerance: the product path is tight, the
        // Riemann-Siegel side drifts like t^{-3/4}.
        let z = z_function(t, &EvalAccuracy::z_default()).unwrap();
        let zeta = zeta_complex(Complex64::new(0.5, t), &EvalAccuracy::new(1e-9).unwrap()).unwrap();
        let tol = 0.13 * t.powf(-0.75) + 1e-6;
        prop_assert!((z.abs() - zeta.norm()).abs() < tol);
    }

    #[test]
    fn z_is_real_definitionally(t in 0.0f64..500.0) {
        // Imaginary part of the defining product, evaluated directly.
        let zeta = zeta_complex(Complex64::new(0.5, t), &EvalAccuracy::new(1e-10).unwrap()).unwrap();
        let theta = if t >= 1.0 {
            zetarg::specfun::theta_rs(t).unwrap()
        } else {
            return Ok(());
        };
        let product = Complex64::new(0.0, theta).exp() * zeta;
        prop_assert!(product.im.abs() < 1e-8);
    }
}
