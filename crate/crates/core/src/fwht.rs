//! Fast Walsh-Hadamard transform, in-place butterfly.
//!
//! With the cell-index bit convention of this crate the transform kernel is
//! `(-1)^popcount(n & u)`, which is symmetric, so no bit-reversal pass is
//! needed and the same butterfly serves as its own inverse up to the factor
//! `2^level`.

use std::ops::{Add, Sub};

use crate::step::{Step1, Step2};

/// In-place unnormalized transform: `data[n] <- sum_u data[u] * (-1)^popcount(n & u)`.
///
/// Panics if the length is not a power of two. Applying it twice multiplies
/// the input by the length.
pub fn fwht<T>(data: &mut [T])
where
    T: Copy + Add<Output = T> + Sub<Output = T>,
{
    let n = data.len();
    assert!(n.is_power_of_two(), "fwht length must be a power of two");
    let mut h = 1;
    while h < n {
        for block in (0..n).step_by(h * 2) {
            for j in block..block + h {
                let a = data[j];
                let b = data[j + h];
                data[j] = a + b;
                data[j + h] = a - b;
            }
        }
        h *= 2;
    }
}

/// Walsh-Fourier coefficients of a 1-d step function:
/// `c(n) = integral f * w_n = 2^-level * sum_u f(u) w_n(u)`.
pub fn coefficients1(f: &Step1<f64>) -> Step1<f64> {
    let level = f.level();
    let scale = 1.0 / f.len() as f64;
    let mut data = f.values().to_vec();
    fwht(&mut data);
    for v in &mut data {
        *v *= scale;
    }
    Step1::from_values(level, data)
}

/// Synthesis from 1-d coefficients: `f(u) = sum_n c(n) w_n(u)`.
pub fn synthesize1(coeffs: &Step1<f64>) -> Step1<f64> {
    let mut data = coeffs.values().to_vec();
    fwht(&mut data);
    Step1::from_values(coeffs.level(), data)
}

/// Row-column decomposition of the 2-d transform: transform along `y` for
/// every row, then along `x` for every column.
fn fwht2_in_place<T>(level: u32, values: &mut [T])
where
    T: Copy + Add<Output = T> + Sub<Output = T>,
{
    let side = 1usize << level;
    for row in values.chunks_mut(side) {
        fwht(row);
    }
    let mut col = Vec::with_capacity(side);
    for y in 0..side {
        col.clear();
        col.extend((0..side).map(|x| values[x * side + y]));
        fwht(&mut col);
        for (x, &v) in col.iter().enumerate() {
            values[x * side + y] = v;
        }
    }
}

/// 2-d Walsh-Fourier coefficients: `c(i, j) = integral f(x,y) w_i(x) w_j(y)`.
pub fn coefficients2(f: &Step2<f64>) -> Step2<f64> {
    let mut g = f.clone();
    fwht2_in_place(g.level(), g.values_mut());
    let scale = 1.0 / (g.values().len() as f64);
    for v in g.values_mut() {
        *v *= scale;
    }
    g
}

/// Synthesis from 2-d coefficients.
pub fn synthesize2(coeffs: &Step2<f64>) -> Step2<f64> {
    let mut g = coeffs.clone();
    fwht2_in_place(g.level(), g.values_mut());
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::walsh::walsh_sign;

    #[test]
    fn matches_naive_transform() {
        let input: Vec<i64> = vec![3, -1, 4, 1, -5, 9, 2, -6];
        let mut out = input.clone();
        fwht(&mut out);
        for n in 0..8u64 {
            let direct: i64 = (0..8u64).map(|u| input[u as usize] * walsh_sign(n, u)).sum();
            assert_eq!(out[n as usize], direct);
        }
    }

    #[test]
    fn double_transform_scales_by_length() {
        let input: Vec<i64> = (0..16).map(|i| i * i - 7).collect();
        let mut data = input.clone();
        fwht(&mut data);
        fwht(&mut data);
        for (a, b) in data.iter().zip(&input) {
            assert_eq!(*a, 16 * b);
        }
    }

    #[test]
    fn analysis_synthesis_round_trip_2d() {
        let f = Step2::from_fn(3, |x, y| (x * 17 + y * 5) as f64 % 7.0 - 3.0);
        let back = synthesize2(&coefficients2(&f));
        for (a, b) in back.values().iter().zip(f.values()) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    #[should_panic]
    fn rejects_non_power_of_two() {
        let mut v = vec![1i64, 2, 3];
        fwht(&mut v);
    }
}
