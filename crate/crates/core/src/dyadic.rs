//! Exact dyadic rational arithmetic.
//!
//! Step functions on the Walsh group that are built from Dirichlet kernels
//! take integer values on cells of measure `2^-n`, so every integral and
//! distribution-function measure that shows up is a dyadic rational
//! `m * 2^e`. Keeping those exact lets the kernel identities be checked
//! with equality instead of a float tolerance.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A dyadic rational `mant * 2^exp`, kept normalized (mant odd or zero).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Dyadic {
    mant: i128,
    exp: i32,
}

impl Dyadic {
    pub const ZERO: Dyadic = Dyadic { mant: 0, exp: 0 };
    pub const ONE: Dyadic = Dyadic { mant: 1, exp: 0 };

    pub fn new(mant: i128, exp: i32) -> Self {
        Dyadic { mant, exp }.normalize()
    }

    /// `2^k`, for any (possibly negative) `k`.
    pub fn pow2(k: i32) -> Self {
        Dyadic { mant: 1, exp: k }
    }

    fn normalize(mut self) -> Self {
        if self.mant == 0 {
            self.exp = 0;
        } else {
            let tz = self.mant.trailing_zeros() as i32;
            self.mant >>= tz;
            self.exp += tz;
        }
        self
    }

    pub fn mantissa(&self) -> i128 {
        self.mant
    }

    pub fn exponent(&self) -> i32 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.mant == 0
    }

    pub fn abs(self) -> Self {
        Dyadic {
            mant: self.mant.abs(),
            exp: self.exp,
        }
    }

    pub fn to_f64(self) -> f64 {
        self.mant as f64 * (self.exp as f64).exp2()
    }

    /// Aligns two values to a common exponent. Panics on overflow, which
    /// only happens far outside the resolutions this crate works at.
    fn aligned(self, other: Self) -> (i128, i128, i32) {
        let exp = self.exp.min(other.exp);
        let a = self.mant << (self.exp - exp) as u32;
        let b = other.mant << (other.exp - exp) as u32;
        (a, b, exp)
    }
}

impl From<i64> for Dyadic {
    fn from(v: i64) -> Self {
        Dyadic::new(v as i128, 0)
    }
}

impl Add for Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: Dyadic) -> Dyadic {
        let (a, b, exp) = self.aligned(rhs);
        Dyadic::new(a + b, exp)
    }
}

impl Sub for Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: Dyadic) -> Dyadic {
        let (a, b, exp) = self.aligned(rhs);
        Dyadic::new(a - b, exp)
    }
}

impl Mul for Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: Dyadic) -> Dyadic {
        Dyadic::new(self.mant * rhs.mant, self.exp + rhs.exp)
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            mant: -self.mant,
            exp: self.exp,
        }
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(*other);
        a.cmp(&b)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp >= 0 {
            write!(f, "{}", self.mant << self.exp as u32)
        } else {
            write!(f, "{}/2^{}", self.mant, -self.exp)
        }
    }
}
