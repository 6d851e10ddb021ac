//! Step functions on the Walsh group and on its square.
//!
//! A function constant on dyadic cells of rank `level` is stored as a flat
//! vector indexed by the cell index (see `walsh` for the bit convention).
//! Each 1-d cell has measure `2^-level`, each 2-d cell `2^-2*level`.

use crate::dyadic::Dyadic;

/// A step function on the dyadic group, constant on the `2^level` cells
/// determined by the first `level` coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct Step1<T> {
    level: u32,
    values: Vec<T>,
}

impl<T: Copy> Step1<T> {
    pub fn from_fn(level: u32, f: impl Fn(u64) -> T) -> Self {
        assert!(level <= 28, "1-d level too large");
        let values = (0..1u64 << level).map(f).collect();
        Step1 { level, values }
    }

    pub fn constant(level: u32, v: T) -> Self {
        Self::from_fn(level, |_| v)
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, cell: u64) -> T {
        self.values[cell as usize]
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [T] {
        &mut self.values
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }

    pub fn from_values(level: u32, values: Vec<T>) -> Self {
        assert_eq!(values.len(), 1usize << level);
        Step1 { level, values }
    }

    pub fn map<U: Copy>(&self, f: impl Fn(T) -> U) -> Step1<U> {
        Step1 {
            level: self.level,
            values: self.values.iter().map(|&v| f(v)).collect(),
        }
    }

    pub fn zip<U: Copy, V: Copy>(&self, other: &Step1<U>, f: impl Fn(T, U) -> V) -> Step1<V> {
        assert_eq!(self.level, other.level);
        Step1 {
            level: self.level,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    /// The same function sampled on finer cells. New coordinates beyond the
    /// old level do not affect the value.
    pub fn refine(&self, level: u32) -> Step1<T> {
        assert!(level >= self.level);
        let mask = (1u64 << self.level) - 1;
        Step1::from_fn(level, |u| self.values[(u & mask) as usize])
    }
}

impl Step1<i64> {
    /// Exact integral over the group: `sum(values) * 2^-level`.
    pub fn integral(&self) -> Dyadic {
        let sum: i128 = self.values.iter().map(|&v| v as i128).sum();
        Dyadic::new(sum, -(self.level as i32))
    }
}

impl Step1<f64> {
    pub fn integral_f64(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.len() as f64
    }
}

/// A step function on the square of the dyadic group, constant on products
/// of rank-`level` cells. Stored row-major: `values[(ux << level) | uy]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Step2<T> {
    level: u32,
    values: Vec<T>,
}

impl<T: Copy> Step2<T> {
    pub fn from_fn(level: u32, f: impl Fn(u64, u64) -> T) -> Self {
        assert!(level <= 14, "2-d level too large");
        let n = 1u64 << level;
        let mut values = Vec::with_capacity(1 << (2 * level));
        for ux in 0..n {
            for uy in 0..n {
                values.push(f(ux, uy));
            }
        }
        Step2 { level, values }
    }

    pub fn constant(level: u32, v: T) -> Self {
        Self::from_fn(level, |_, _| v)
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    /// Number of cells along each axis.
    pub fn side(&self) -> u64 {
        1u64 << self.level
    }

    pub fn value(&self, ux: u64, uy: u64) -> T {
        self.values[((ux << self.level) | uy) as usize]
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [T] {
        &mut self.values
    }

    pub fn map<U: Copy>(&self, f: impl Fn(T) -> U) -> Step2<U> {
        Step2 {
            level: self.level,
            values: self.values.iter().map(|&v| f(v)).collect(),
        }
    }

    pub fn zip<U: Copy, V: Copy>(&self, other: &Step2<U>, f: impl Fn(T, U) -> V) -> Step2<V> {
        assert_eq!(self.level, other.level);
        Step2 {
            level: self.level,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

impl<T> Step2<T>
where
    T: Copy + std::ops::Mul<Output = T>,
{
    /// Product function `(x, y) -> u(x) * v(y)`.
    pub fn separable(u: &Step1<T>, v: &Step1<T>) -> Self {
        assert_eq!(u.level(), v.level());
        Step2::from_fn(u.level(), |ux, uy| u.value(ux) * v.value(uy))
    }
}

impl Step2<i64> {
    pub fn integral(&self) -> Dyadic {
        let sum: i128 = self.values.iter().map(|&v| v as i128).sum();
        Dyadic::new(sum, -2 * self.level as i32)
    }
}

impl Step2<f64> {
    pub fn integral_f64(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.values.len() as f64
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}
