//! Bernoulli-number coefficient tables shared by the Euler-Maclaurin and
//! Stirling expansions.

/// B_{2k}/(2k)! for k = 1..=20, the tail coefficients of Euler-Maclaurin
/// summation.
pub(crate) const EULER_MACLAURIN: [f64; 20] = [
    8.333333333333333e-2,
    -1.388888888888889e-3,
    3.306878306878307e-5,
    -8.267195767195767e-7,
    2.08767569878681e-8,
    -5.284190138687493e-10,
    1.3382536530684679e-11,
    -3.389680296322583e-13,
    8.586062056277845e-15,
    -2.174868698558062e-16,
    5.50900282836023e-18,
    -1.3954464685812523e-19,
    3.534707039629467e-21,
    -8.953517427037547e-23,
    2.267952452337683e-24,
    -5.744790668872202e-26,
    1.455172475614865e-27,
    -3.685994940665311e-29,
    9.336734257095045e-31,
    -2.36502241570063e-32,
];

/// B_{2k}/((2k)(2k-1)) for k = 1..=15, the Stirling-series coefficients of
/// log Gamma.
pub(crate) const STIRLING: [f64; 15] = [
    8.333333333333333e-2,
    -2.777777777777778e-3,
    7.936507936507937e-4,
    -5.952380952380953e-4,
    8.417508417508417e-4,
    -1.9175269175269176e-3,
    6.41025641025641e-3,
    -2.955065359477124e-2,
    1.7964437236883057e-1,
    -1.3924322169059011,
    1.3402864044168392e1,
    -1.5684828462600202e2,
    2.1931033333333333e3,
    -3.610877125372499e4,
    6.914722688513131e5,
];
