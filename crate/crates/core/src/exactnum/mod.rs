//! Exact number towers.
//!
//! Everything here is exact; floating point only shows up in
//! [`Cyclotomic::to_complex`], which exists for diagnostics.

mod cyclotomic;
mod laurent;
mod poly;
mod ratfunc;

use std::fmt;
use std::ops::{Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub(crate) use cyclotomic::cyclotomic_polynomial;
pub use cyclotomic::{euler_phi, Cyclotomic};
pub use laurent::Laurent;
pub use poly::Poly;
pub use ratfunc::RationalFunction;

pub type Rational = num_rational::BigRational;

/// Commutative ring with unit, as needed by the generic polynomial and
/// matrix code.
pub trait Ring:
    Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inverse(&self) -> Self;
}

impl Field for Rational {
    fn inverse(&self) -> Self {
        self.recip()
    }
}

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Returns the value as an `i64` when it is an integer that fits.
pub fn rational_to_i64(x: &Rational) -> Option<i64> {
    use num_traits::ToPrimitive;
    if x.is_integer() {
        x.to_integer().to_i64()
    } else {
        None
    }
}
