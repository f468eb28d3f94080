//! Exact arithmetic in the variable `q`.
//!
//! Coefficients are rationals ([`Rational`]) or cyclotomic numbers
//! ([`ExactScalar`]). On top of these sit sparse Laurent polynomials
//! ([`LaurentPoly`]) and rational functions in canonical form
//! ([`RationalFunction`]).

mod cyclotomic;
mod intpoly;
mod json;
mod laurent;
pub mod matrix;
mod ratfunc;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

pub use cyclotomic::{cyclotomic_polynomial, ExactScalar};
pub use json::{parse_rational, rational_to_string, Json};
pub use laurent::LaurentPoly;
pub use matrix::Matrix;
pub use ratfunc::RationalFunction;

pub type Rational = num_rational::BigRational;

/// Commutative ring with an involutive conjugation, used as the value type of
/// class functions and as polynomial coefficients.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    /// Complex conjugation. Identity on rationals.
    fn conj(&self) -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n.into()))
    }
}

/// A [`Ring`] in which every nonzero element is invertible.
pub trait Field: Ring {
    fn try_inv(&self) -> Option<Self>;
}

impl Ring for Rational {
    fn conj(&self) -> Self {
        self.clone()
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

impl Field for Rational {
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Rational number from a machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Rational number `n / d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Laurent polynomial with rational coefficients from `(exponent, coefficient)` pairs.
pub fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, rat(c))))
}
