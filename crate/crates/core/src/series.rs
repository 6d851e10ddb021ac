//! Rectangular partial sums of two-dimensional Walsh-Fourier series.

use crate::fwht::{coefficients2, synthesize2};
use crate::step::Step2;

/// The rectangular partial sum `S_{m,n} f` of a step function, computed by
/// truncating the coefficient grid and resynthesizing.
///
/// Requires `m, n <= 2^level`; a step function of rank `level` has no
/// coefficients beyond that range.
pub fn partial_sum(f: &Step2<f64>, m: u64, n: u64) -> Step2<f64> {
    let coeffs = coefficients2(f);
    partial_sum_from_coefficients(&coeffs, m, n)
}

/// Same truncation starting from a precomputed coefficient grid.
pub fn partial_sum_from_coefficients(coeffs: &Step2<f64>, m: u64, n: u64) -> Step2<f64> {
    let side = coeffs.side();
    assert!(m <= side && n <= side, "partial sum order exceeds resolution");
    let truncated = Step2::from_fn(coeffs.level(), |i, j| {
        if i < m && j < n {
            coeffs.value(i, j)
        } else {
            0.0
        }
    });
    synthesize2(&truncated)
}

/// The square dyadic partial sums `(S_{2^k,2^k} f)_k`, i.e. the martingale
/// of conditional expectations onto dyadic squares of rank `k`.
pub fn dyadic_martingale(f: &Step2<f64>) -> Vec<Step2<f64>> {
    let coeffs = coefficients2(f);
    (0..=f.level())
        .map(|k| partial_sum_from_coefficients(&coeffs, 1 << k, 1 << k))
        .collect()
}
