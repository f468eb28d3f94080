use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::intpoly::gcd_rational;
use super::laurent::dense_divrem;
use super::{Field, LaurentPoly, Rational, Ring};
use crate::error::{Error, Result};

/// Rational function in `q` with rational coefficients.
///
/// The stored form is canonical: the numerator is a Laurent polynomial, the
/// denominator is a monic ordinary polynomial with nonzero constant term, and
/// the two share no nonconstant factor. Equal functions therefore have equal
/// representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RationalFunction {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::from_poly(LaurentPoly::constant(r))
    }

    fn normalize(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (kn, n0) = num.qprime_split().expect("nonzero");
        let (kd, d0) = den.qprime_split().expect("nonzero");
        let shift = kn - kd;
        if let Some(c) = d0.as_constant() {
            let inv = c.recip();
            return RationalFunction {
                num: n0.shift(shift).scale(&inv),
                den: LaurentPoly::one(),
            };
        }
        let (_, mut nv) = n0.to_dense();
        let (_, mut dv) = d0.to_dense();
        let g = gcd_rational(&nv, &dv);
        if g.len() > 1 {
            nv = dense_divrem(&nv, &g).0;
            dv = dense_divrem(&dv, &g).0;
        }
        let lead = dv.last().expect("nonzero denominator").recip();
        let num = LaurentPoly::from_dense(shift, nv).scale(&lead);
        let den = LaurentPoly::from_dense(0, dv).scale(&lead);
        RationalFunction { num, den }
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    /// The Laurent polynomial this function equals, if any.
    pub fn as_laurent(&self) -> Option<LaurentPoly> {
        if self.den.is_one() {
            Some(self.num.clone())
        } else {
            None
        }
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// Substitution `q -> q^{-1}`.
    pub fn star(&self) -> Self {
        Self::normalize(self.num.star(), self.den.star())
    }

    pub fn evaluate(&self, q0: &Rational) -> Result<Rational> {
        let d = self.den.evaluate(q0)?;
        if d.is_zero() {
            return Err(Error::Pole(q0.to_string()));
        }
        Ok(self.num.evaluate(q0)? / d)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        RationalFunction {
            num: self.num.scale(s),
            den: self.den.clone(),
        }
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        Self::normalize(&self.num * p, self.den.clone())
    }
}

impl From<LaurentPoly> for RationalFunction {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, o: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RationalFunction::normalize(&self.num + &o.num, self.den.clone());
        }
        RationalFunction::normalize(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, o: &RationalFunction) -> RationalFunction {
        self + &(-o)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, o: &RationalFunction) -> RationalFunction {
        if self.is_zero() || o.is_zero() {
            return RationalFunction::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RationalFunction::from_poly(&self.num * &o.num);
        }
        RationalFunction::normalize(&self.num * &o.num, &self.den * &o.den)
    }
}

impl<'a> Div<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn div(self, o: &RationalFunction) -> RationalFunction {
        assert!(!o.is_zero(), "division by zero rational function");
        RationalFunction::normalize(&self.num * &o.den, &self.den * &o.num)
    }
}

impl Neg for RationalFunction {
    type Output = Self;
    fn neg(self) -> Self {
        RationalFunction {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        self.clone().neg()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalFunction {
            type Output = Self;
            fn $m(self, o: Self) -> Self {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a RationalFunction> for RationalFunction {
            type Output = Self;
            fn $m(self, o: &RationalFunction) -> Self {
                (&self).$m(o)
            }
        }
    };
}
forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Ring for RationalFunction {
    fn conj(&self) -> Self {
        self.clone()
    }
    fn from_rational(r: &Rational) -> Self {
        Self::from_rational(r.clone())
    }
}

impl Field for RationalFunction {
    fn try_inv(&self) -> Option<Self> {
        self.inv().ok()
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{lp, rat};

    fn rf(n: &[(i64, i64)], d: &[(i64, i64)]) -> RationalFunction {
        RationalFunction::new(lp(n), lp(d)).unwrap()
    }

    #[test]
    fn canonical_form() {
        // (q^2-1)/(2q-2) = (q+1)/2
        let f = rf(&[(2, 1), (0, -1)], &[(1, 2), (0, -2)]);
        assert!(f.is_laurent());
        assert_eq!(
            f.numer(),
            &lp(&[(1, 1), (0, 1)]).scale(&crate::exactalg::ratio(1, 2))
        );
        // q / (q^3 + q^2) = q^-1 / (q + 1)
        let g = rf(&[(1, 1)], &[(3, 1), (2, 1)]);
        assert_eq!(g.numer(), &lp(&[(-1, 1)]));
        assert_eq!(g.denom(), &lp(&[(1, 1), (0, 1)]));
    }

    #[test]
    fn sum_of_opposites_is_zero() {
        let a = rf(&[(3, 2), (0, 1)], &[(2, 1), (0, 7)]);
        assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn pole_and_zero_base() {
        let f = rf(&[(0, 1)], &[(1, 1), (0, -1)]);
        assert!(matches!(f.evaluate(&rat(1)), Err(Error::Pole(_))));
        assert_eq!(f.evaluate(&rat(3)).unwrap(), crate::exactalg::ratio(1, 2));
        let g = RationalFunction::from_poly(lp(&[(-1, 1)]));
        assert_eq!(g.evaluate(&rat(0)), Err(Error::ZeroBase));
    }

    #[test]
    fn star_of_quotient() {
        // star(1/(q-1)) = q/(1-q) = -q/(q-1)
        let f = rf(&[(0, 1)], &[(1, 1), (0, -1)]);
        assert_eq!(f.star(), rf(&[(1, -1)], &[(1, 1), (0, -1)]));
        assert_eq!(f.star().star(), f);
    }

    #[test]
    fn xi_entries_for_rank_one() {
        // 1/2 (1/(q-1) + 1/(q+1)) = q/(q^2-1)
        let a = rf(&[(0, 1)], &[(1, 1), (0, -1)]);
        let b = rf(&[(0, 1)], &[(1, 1), (0, 1)]);
        let half = crate::exactalg::ratio(1, 2);
        assert_eq!((&a + &b).scale(&half), rf(&[(1, 1)], &[(2, 1), (0, -1)]));
        assert_eq!((&a - &b).scale(&half), rf(&[(0, 1)], &[(2, 1), (0, -1)]));
    }
}
