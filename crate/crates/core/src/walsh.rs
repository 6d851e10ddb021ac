//! The Walsh-Paley system on the dyadic group.
//!
//! A point of the dyadic group truncated to its first `level` coordinates
//! is stored as a cell index `u`, with coordinate `x_k` equal to bit `k`
//! of `u`. Group addition is then XOR of cell indices, and the Walsh-Paley
//! function of index `n` is `(-1)^popcount(n & u)` as long as every set
//! bit of `n` lies below `level`.

use crate::step::Step1;

/// Position of the highest set bit of `n`, i.e. `2^bit_length(n) <= n < 2^(bit_length(n)+1)`.
///
/// Panics for `n = 0`, which has no highest bit.
pub fn bit_length(n: u64) -> u32 {
    assert!(n > 0, "bit_length of zero is undefined");
    63 - n.leading_zeros()
}

/// The Rademacher function `r_k` at a cell: `(-1)^{x_k}`.
pub fn rademacher(k: u32, cell: u64) -> i64 {
    if cell >> k & 1 == 0 {
        1
    } else {
        -1
    }
}

/// The Walsh-Paley function `w_n` at a cell: `(-1)^{sum_k n_k x_k}`.
pub fn walsh_sign(n: u64, cell: u64) -> i64 {
    if (n & cell).count_ones() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `w_n` sampled over all cells at the given level, as a step function.
///
/// Requires `n < 2^level` so the function is constant on cells.
pub fn walsh_step(n: u64, level: u32) -> Step1<i64> {
    assert!(level >= 64 || n < 1u64 << level, "index too large for level");
    Step1::from_fn(level, |u| walsh_sign(n, u))
}

/// Gray code, converting a sequency-ordered index to its Walsh-Paley index.
///
/// The sequency-ordered Walsh function with `n` sign changes over the unit
/// interval is the Walsh-Paley function of index `gray(n)`.
pub fn sequency_to_paley(n: u64) -> u64 {
    n ^ (n >> 1)
}

/// Inverse Gray code.
pub fn paley_to_sequency(mut n: u64) -> u64 {
    let mut shift = 1;
    while shift < 64 {
        n ^= n >> shift;
        shift <<= 1;
    }
    n
}

/// Reinterprets a cell index as a position in left-to-right interval order,
/// where coordinate `x_0` decides the coarsest halving.
pub fn cell_to_interval(cell: u64, level: u32) -> u64 {
    if level == 0 {
        0
    } else {
        cell.reverse_bits() >> (64 - level)
    }
}

/// Whether the truncated point lies in the dyadic interval `I_j` around zero,
/// i.e. its first `j` coordinates vanish.
pub fn in_interval(cell: u64, j: u32) -> bool {
    j == 0 || cell & ((1u64 << j) - 1) == 0
}
