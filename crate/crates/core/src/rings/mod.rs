//! Exact coefficient domains.
//!
//! Values of the cyclotomic and truncated rings carry their ring parameters
//! (order, variable count), so constants are produced from an existing value
//! through the `*_like` constructors of [`Ring`].

mod cyclotomic;
pub(crate) mod text;
mod rational;
mod truncated;
mod value;

use std::fmt;

use num_bigint::BigInt;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, Cyclotomic};
pub use rational::{int, parse_rational, rat, Rational};
pub use truncated::Truncated;
pub use value::RingValue;

/// A commutative ring whose elements know which ring they belong to.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn integer_like(&self, n: &BigInt) -> Self;
    fn is_nil(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;

    fn int_like(&self, n: i64) -> Self {
        self.integer_like(&BigInt::from(n))
    }

    fn is_unity(&self) -> bool {
        *self == self.one_like()
    }

    fn scaled(&self, n: i64) -> Self {
        self.times(&self.int_like(n))
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        acc
    }
}

/// A ring containing the rationals.
pub trait QAlgebra: Ring {
    fn rational_like(&self, r: &Rational) -> Self;
    fn try_inverse(&self) -> Option<Self>;
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        int(0)
    }
    fn one_like(&self) -> Self {
        int(1)
    }
    fn integer_like(&self, n: &BigInt) -> Self {
        Rational::from_integer(n.clone())
    }
    fn is_nil(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
}

impl QAlgebra for Rational {
    fn rational_like(&self, r: &Rational) -> Self {
        r.clone()
    }
    fn try_inverse(&self) -> Option<Self> {
        if Ring::is_nil(self) {
            None
        } else {
            Some(num_traits::Inv::inv(self.clone()))
        }
    }
}

/// Serializes any displayable value as its string form.
pub fn display<T: fmt::Display, S: serde::Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}
