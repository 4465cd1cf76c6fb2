//! Explicit upper bounds for S(T), the argument of the Riemann
//! zeta-function on the critical line.
//!
//! The library evaluates linear-in-log-T bounds |S(T)| <= a + b log T from
//! three sources — Rosser's classical benchmark, the Backlund-method bound
//! driven by a critical-line growth certificate, and the small-radius
//! Jensen-circle variant — optimizes their free parameters at a requested
//! height, and checks everything at desk scale against S(t) computed
//! directly from a zero scan.
//!
//! Module map:
//!
//! * [`specfun`] — real/complex zeta, complex log-gamma, Riemann-Siegel
//!   theta and Z.
//! * [`critline`] — certified growth bounds B |1+s|^theta on the critical
//!   line (convexity, Cheng-Graham, custom exponents).
//! * [`strip`] — Phragmen-Lindelof interpolation and the vertical-strip
//!   bounds assembled from it.
//! * [`bounds`] — the end-product bound formulas and their coefficient
//!   functions.
//! * [`optimize`] — parameter search, the comparison table, the
//!   convexity/subconvexity crossover.
//! * [`verify`] — zero scanning, direct S(t), empirical bound and lemma
//!   checks.
//! * [`report`] — deterministic report envelopes for the CLI.
//! * [`refvals`] — embedded published reference values with citations.

// Guards of the form `!(x > y)` are used on purpose: they reject NaN
// inputs along with out-of-range ones.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod critline;
pub mod error;
pub mod optimize;
pub mod refvals;
pub mod report;
pub mod specfun;
pub mod strip;
pub mod verify;

pub use error::{Error, Result};
