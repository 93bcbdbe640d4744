//! The integer scalar abstraction used by the linear algebra layer.
//!
//! Everything in [`crate::linalg`] is written against [`Scalar`], so the same
//! Smith normal form and echelon code runs on arbitrary precision integers
//! (the default, see [`crate::Int`]) and on machine integers in tests.
//! Machine integer implementations panic on overflow instead of wrapping.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A Euclidean ring of integers.
pub trait Scalar: Clone + Debug + Display + Ord + Hash + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn to_i64(&self) -> Option<i64>;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;

    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Floor division.
    fn div_floor(&self, other: &Self) -> Self;
    /// Floor remainder: `0 <= r < d` for positive `d`.
    fn mod_floor(&self, other: &Self) -> Self;

    /// `self += a * b`
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        *self = self.add(&a.mul(b));
    }

    /// `self -= a * b`
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        *self = self.sub(&a.mul(b));
    }

    fn abs(&self) -> Self {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// `|self| == 1`
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }

    fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            other.is_zero()
        } else {
            other.mod_floor(self).is_zero()
        }
    }

    /// Non-negative gcd.
    fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.abs(), other.abs());
        while !b.is_zero() {
            let r = a.mod_floor(&b);
            a = b;
            b = r;
        }
        a
    }

    /// Returns `(g, s, t)` with `g = s*self + t*other` and `g >= 0`.
    ///
    /// When `self` divides `other` the coefficients are `(|self|, ±1, 0)`.
    fn extended_gcd(&self, other: &Self) -> (Self, Self, Self) {
        if !self.is_zero() && self.divides(other) {
            let s = if self.is_negative() { Self::one().neg() } else { Self::one() };
            return (self.abs(), s, Self::zero());
        }
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let q = r0.div_floor(&r1);
            let r2 = r0.sub(&q.mul(&r1));
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r2);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        if r0.is_negative() {
            (r0.neg(), s0.neg(), t0.neg())
        } else {
            (r0, s0, t0)
        }
    }

    /// Exact quotient; the caller guarantees divisibility.
    fn div_exact(&self, other: &Self) -> Self {
        debug_assert!(other.divides(self), "{self} is not divisible by {other}");
        self.div_floor(other)
    }

    /// Reduces into `[0, m)` when `m > 0`; identity when `m == 0`.
    fn reduce(&self, m: &Self) -> Self {
        if m.is_zero() {
            self.clone()
        } else {
            self.mod_floor(m)
        }
    }
}

impl Scalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn to_i64(&self) -> Option<i64> {
        ToPrimitive::to_i64(self)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_floor(&self, other: &Self) -> Self {
        Integer::div_floor(self, other)
    }
    fn mod_floor(&self, other: &Self) -> Self {
        Integer::mod_floor(self, other)
    }
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        *self -= a * b;
    }
    fn abs(&self) -> Self {
        Signed::abs(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
}

macro_rules! machine_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            fn zero() -> Self {
                0
            }
            fn one() -> Self {
                1
            }
            fn from_i64(v: i64) -> Self {
                <$t>::try_from(v).expect("value out of range")
            }
            fn to_i64(&self) -> Option<i64> {
                i64::try_from(*self).ok()
            }
            fn is_zero(&self) -> bool {
                *self == 0
            }
            fn is_negative(&self) -> bool {
                *self < 0
            }
            fn add(&self, other: &Self) -> Self {
                self.checked_add(*other).expect("integer overflow")
            }
            fn sub(&self, other: &Self) -> Self {
                self.checked_sub(*other).expect("integer overflow")
            }
            fn mul(&self, other: &Self) -> Self {
                self.checked_mul(*other).expect("integer overflow")
            }
            fn neg(&self) -> Self {
                self.checked_neg().expect("integer overflow")
            }
            fn div_floor(&self, other: &Self) -> Self {
                Integer::div_floor(self, other)
            }
            fn mod_floor(&self, other: &Self) -> Self {
                Integer::mod_floor(self, other)
            }
        }
    };
}

machine_scalar!(i64);
machine_scalar!(i128);
