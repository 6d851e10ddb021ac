//! Walsh-Dirichlet kernels.

use crate::step::Step1;
use crate::walsh::{in_interval, rademacher, walsh_sign};

/// The kernel `D_{2^j}`: `2^j` on the dyadic interval `I_j`, zero outside.
pub fn dirichlet_dyadic(j: u32, level: u32) -> Step1<i64> {
    assert!(j <= level);
    Step1::from_fn(level, |u| if in_interval(u, j) { 1i64 << j } else { 0 })
}

/// `D_n` evaluated through the Paley decomposition
/// `D_n = w_n * sum_j n_j w_{2^j} D_{2^j}`, which costs `O(popcount(n))`
/// per cell instead of `O(n)`.
pub fn dirichlet(n: u64, level: u32) -> Step1<i64> {
    assert!(n <= 1u64 << level, "kernel order too large for level");
    Step1::from_fn(level, |u| dirichlet_at(n, u))
}

/// Pointwise value of `D_n` at a cell, via the Paley decomposition.
pub fn dirichlet_at(n: u64, cell: u64) -> i64 {
    let mut sum = 0i64;
    let mut bits = n;
    while bits != 0 {
        let j = bits.trailing_zeros();
        if in_interval(cell, j) {
            sum += rademacher(j, cell) * (1i64 << j);
        }
        bits &= bits - 1;
    }
    walsh_sign(n, cell) * sum
}

/// `D_n` by direct summation of the first `n` Walsh functions. Slow;
/// serves as the independent route for checking the decomposition.
pub fn dirichlet_direct(n: u64, level: u32) -> Step1<i64> {
    assert!(n <= 1u64 << level, "kernel order too large for level");
    Step1::from_fn(level, |u| (0..n).map(|k| walsh_sign(k, u)).sum())
}

/// The block kernel `D_{2^hi} - D_{2^lo}`, supported on `I_lo`.
pub fn dirichlet_block(lo: u32, hi: u32, level: u32) -> Step1<i64> {
    assert!(lo < hi && hi <= level);
    dirichlet_dyadic(hi, level).zip(&dirichlet_dyadic(lo, level), |a, b| a - b)
}
