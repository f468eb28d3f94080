use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::{Field, Rational, Ring};
use crate::error::{Error, Result};

/// Sparse Laurent polynomial in `q`.
///
/// Terms are kept sorted by exponent and no stored coefficient is zero, so the
/// zero polynomial has no terms and structural equality is equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<C = Rational> {
    terms: Vec<(i64, C)>,
}

impl<C: Field> LaurentPoly<C> {
    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(terms: I) -> Self {
        let mut map: BTreeMap<i64, C> = BTreeMap::new();
        for (e, c) in terms {
            match map.get_mut(&e) {
                Some(x) => *x = x.clone() + &c,
                None => {
                    map.insert(e, c);
                }
            }
        }
        LaurentPoly {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Builds from terms already sorted by strictly increasing exponent.
    fn from_sorted(terms: Vec<(i64, C)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        LaurentPoly {
            terms: terms.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: C, e: i64) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly {
                terms: vec![(e, c)],
            }
        }
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(C::one(), 1)
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(C::one(), e)
    }

    /// Ordinary polynomial from coefficients listed from the constant term up.
    pub fn from_coeffs(coeffs: &[C]) -> Self {
        Self::from_dense(0, coeffs.to_vec())
    }

    pub(crate) fn from_dense(low: i64, coeffs: Vec<C>) -> Self {
        let terms = coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (low + i as i64, c))
            .collect();
        LaurentPoly { terms }
    }

    /// Dense coefficients from `q^valuation` to `q^degree`; empty for zero.
    pub(crate) fn to_dense(&self) -> (i64, Vec<C>) {
        match (self.terms.first(), self.terms.last()) {
            (Some(&(lo, _)), Some(&(hi, _))) => {
                let mut v = vec![C::zero(); (hi - lo + 1) as usize];
                for (e, c) in &self.terms {
                    v[(e - lo) as usize] = c.clone();
                }
                (lo, v)
            }
            _ => (0, Vec::new()),
        }
    }

    pub fn terms(&self) -> &[(i64, C)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: i64) -> C {
        match self.terms.binary_search_by(|(x, _)| x.cmp(&e)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => C::zero(),
        }
    }

    /// Largest exponent, `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        self.terms.last().map(|t| t.0)
    }

    /// Smallest exponent, `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        self.terms.first().map(|t| t.0)
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.terms.last().map(|t| &t.1)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == 0)
    }

    /// The constant value if this is a constant polynomial.
    pub fn as_constant(&self) -> Option<C> {
        if self.is_constant() {
            Some(self.coeff(0))
        } else {
            None
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// True when no exponent is negative.
    pub fn is_ordinary(&self) -> bool {
        self.valuation().is_none_or(|v| v >= 0)
    }

    /// Substitution `q -> q^{-1}`.
    pub fn star(&self) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(e, c)| (-e, c.clone()))
                .collect(),
        }
    }

    /// Complex conjugation of the coefficients (`q` is treated as real).
    pub fn conj_coeffs(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c.conj())).collect(),
        }
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitution `q -> q^k` for `k >= 1`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k >= 1, "substitute_power needs a positive exponent");
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e * k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &C) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self::from_sorted(
            self.terms
                .iter()
                .map(|(e, c)| (*e, c.clone() * s))
                .collect(),
        )
    }

    pub fn map_coeffs<D: Field>(&self, f: impl Fn(&C) -> D) -> LaurentPoly<D> {
        LaurentPoly::from_sorted(self.terms.iter().map(|(e, c)| (*e, f(c))).collect())
    }

    /// Evaluation at `q = q0`. A negative power at `q0 = 0` is an error.
    pub fn evaluate(&self, q0: &C) -> Result<C> {
        if q0.is_zero() {
            if self.valuation().is_some_and(|v| v < 0) {
                return Err(Error::ZeroBase);
            }
            return Ok(self.coeff(0));
        }
        let inv = q0.try_inv().ok_or(Error::DivisionByZero)?;
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            let p = pow(if *e < 0 { &inv } else { q0 }, e.unsigned_abs());
            acc = acc + &(c.clone() * &p);
        }
        Ok(acc)
    }

    /// Writes `f = q^k f'` with `f'` an ordinary polynomial with nonzero
    /// constant term. Zero has no such decomposition.
    pub fn qprime_split(&self) -> Result<(i64, Self)> {
        let v = self
            .valuation()
            .ok_or_else(|| Error::ZeroInput("qprime_split of zero".into()))?;
        Ok((v, self.shift(-v)))
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`
    /// in the Laurent polynomial ring.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (da, a) = self.qprime_split().ok()?;
        let (db, b) = d.qprime_split().ok()?;
        let (_, av) = a.to_dense();
        let (_, bv) = b.to_dense();
        let (quot, rem) = dense_divrem(&av, &bv);
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_dense(da - db, quot))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

fn pow<C: Field>(base: &C, mut e: u64) -> C {
    let mut acc = C::one();
    let mut b = base.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * &b;
        }
        e >>= 1;
        if e > 0 {
            b = b.clone() * &b;
        }
    }
    acc
}

/// Division with remainder of dense polynomials (constant term first).
pub(crate) fn dense_divrem<C: Field>(a: &[C], b: &[C]) -> (Vec<C>, Vec<C>) {
    let mut b = b.to_vec();
    while b.last().is_some_and(|c| c.is_zero()) {
        b.pop();
    }
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r = a.to_vec();
    while r.last().is_some_and(|c| c.is_zero()) {
        r.pop();
    }
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = b
        .last()
        .unwrap()
        .try_inv()
        .expect("nonzero leading coefficient");
    let mut q = vec![C::zero(); r.len() - b.len() + 1];
    for i in (0..q.len()).rev() {
        let c = r[i + b.len() - 1].clone() * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[i + j] = r[i + j].clone() - &(c.clone() * bj);
        }
        q[i] = c;
    }
    r.truncate(b.len() - 1);
    while r.last().is_some_and(|c| c.is_zero()) {
        r.pop();
    }
    (q, r)
}

impl<C: Field> Zero for LaurentPoly<C> {
    fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Field> One for LaurentPoly<C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

fn merge<C: Field>(a: &[(i64, C)], b: &[(i64, C)], negate_b: bool) -> Vec<(i64, C)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ord = match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) => x.0.cmp(&y.0),
            (Some(_), None) => Ordering::Less,
            _ => Ordering::Greater,
        };
        match ord {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                let (e, c) = &b[j];
                out.push((*e, if negate_b { -c.clone() } else { c.clone() }));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b {
                    a[i].1.clone() - &b[j].1
                } else {
                    a[i].1.clone() + &b[j].1
                };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn multiply<C: Field>(a: &[(i64, C)], b: &[(i64, C)]) -> Vec<(i64, C)> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let lo = a[0].0 + b[0].0;
    let hi = a[a.len() - 1].0 + b[b.len() - 1].0;
    let span = (hi - lo + 1) as usize;
    if span <= 4 * a.len() * b.len() + 64 {
        let mut acc: Vec<Option<C>> = vec![None; span];
        for (ea, ca) in a {
            for (eb, cb) in b {
                let slot = &mut acc[(ea + eb - lo) as usize];
                let p = ca.clone() * cb;
                *slot = Some(match slot.take() {
                    Some(x) => x + &p,
                    None => p,
                });
            }
        }
        acc.into_iter()
            .enumerate()
            .filter_map(|(i, c)| c.filter(|c| !c.is_zero()).map(|c| (lo + i as i64, c)))
            .collect()
    } else {
        let mut map: BTreeMap<i64, C> = BTreeMap::new();
        for (ea, ca) in a {
            for (eb, cb) in b {
                let p = ca.clone() * cb;
                let e = ea + eb;
                match map.get_mut(&e) {
                    Some(x) => *x = x.clone() + &p,
                    None => {
                        map.insert(e, p);
                    }
                }
            }
        }
        map.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }
}

impl<'a, C: Field> Add<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, o: &LaurentPoly<C>) -> LaurentPoly<C> {
        LaurentPoly {
            terms: merge(&self.terms, &o.terms, false),
        }
    }
}

impl<'a, C: Field> Sub<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, o: &LaurentPoly<C>) -> LaurentPoly<C> {
        LaurentPoly {
            terms: merge(&self.terms, &o.terms, true),
        }
    }
}

impl<'a, C: Field> Mul<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, o: &LaurentPoly<C>) -> LaurentPoly<C> {
        LaurentPoly {
            terms: multiply(&self.terms, &o.terms),
        }
    }
}

impl<C: Field> Neg for LaurentPoly<C> {
    type Output = Self;
    fn neg(self) -> Self {
        LaurentPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl<C: Field> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        self.clone().neg()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl<C: Field> $tr for LaurentPoly<C> {
            type Output = Self;
            fn $m(self, o: Self) -> Self {
                (&self).$m(&o)
            }
        }
        impl<'a, C: Field> $tr<&'a LaurentPoly<C>> for LaurentPoly<C> {
            type Output = Self;
            fn $m(self, o: &LaurentPoly<C>) -> Self {
                (&self).$m(o)
            }
        }
    };
}
forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl<C: Field> AddAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn add_assign(&mut self, o: &LaurentPoly<C>) {
        self.terms = merge(&self.terms, &o.terms, false);
    }
}

impl<C: Field> SubAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn sub_assign(&mut self, o: &LaurentPoly<C>) {
        self.terms = merge(&self.terms, &o.terms, true);
    }
}

impl<C: Field> Ring for LaurentPoly<C> {
    fn conj(&self) -> Self {
        self.conj_coeffs()
    }
    fn from_rational(r: &Rational) -> Self {
        Self::constant(C::from_rational(r))
    }
}

impl<C: Field> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let s = c.to_string();
            let (neg, body) = match s.strip_prefix('-') {
                Some(rest) if !rest.contains([' ', '+']) => (true, rest.to_string()),
                _ => (false, s.clone()),
            };
            let body = if body.contains([' ', '+', '-']) {
                format!("({body})")
            } else {
                body
            };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let unit = body == "1";
            match *e {
                0 => write!(f, "{body}")?,
                _ => {
                    if !unit {
                        write!(f, "{body}*")?;
                    }
                    if *e == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<C: Field> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{lp, rat, ratio};

    #[test]
    fn zero_has_no_terms() {
        let p = lp(&[(1, 2), (1, -2)]);
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
        assert_eq!(lp(&[(0, 0), (3, 1)]).num_terms(), 1);
    }

    #[test]
    fn arithmetic() {
        let a = lp(&[(1, 1), (0, -1)]);
        let b = lp(&[(1, 1), (0, 1)]);
        assert_eq!(&a * &b, lp(&[(2, 1), (0, -1)]));
        assert_eq!(&a + &b, lp(&[(1, 2)]));
        assert_eq!(&a - &b, lp(&[(0, -2)]));
        let c = lp(&[(-3, 1), (5, 2)]);
        assert_eq!(&c * &c, lp(&[(-6, 1), (2, 4), (10, 4)]));
    }

    #[test]
    fn star_inverts_exponents() {
        let a = lp(&[(-1, 3), (2, 1)]);
        assert_eq!(a.star(), lp(&[(1, 3), (-2, 1)]));
        assert_eq!(a.star().star(), a);
    }

    #[test]
    fn split_examples() {
        let f = lp(&[(0, 1), (-1, 1)]);
        let (k, g) = f.qprime_split().unwrap();
        assert_eq!(k, -1);
        assert_eq!(g, lp(&[(1, 1), (0, 1)]));
        assert!(LaurentPoly::<Rational>::zero().qprime_split().is_err());
    }

    #[test]
    fn evaluation() {
        assert_eq!(lp(&[(2, 1), (0, -1)]).evaluate(&rat(3)).unwrap(), rat(8));
        assert_eq!(lp(&[(-1, 1)]).evaluate(&rat(2)).unwrap(), ratio(1, 2));
        assert_eq!(lp(&[(-1, 1)]).evaluate(&rat(0)), Err(Error::ZeroBase));
        assert_eq!(lp(&[(0, 4), (3, 1)]).evaluate(&rat(0)).unwrap(), rat(4));
    }

    #[test]
    fn exact_division() {
        let a = lp(&[(3, 1), (0, -1)]);
        let b = lp(&[(1, 1), (0, -1)]);
        assert_eq!(a.div_exact(&b).unwrap(), lp(&[(2, 1), (1, 1), (0, 1)]));
        assert_eq!(
            a.shift(-4).div_exact(&b.shift(2)).unwrap(),
            lp(&[(-4, 1), (-5, 1), (-6, 1)])
        );
        assert!(a.div_exact(&lp(&[(1, 1), (0, 1)])).is_none());
    }

    #[test]
    fn display() {
        assert_eq!(lp(&[(2, 1), (0, -1)]).to_string(), "q^2 - 1");
        assert_eq!(lp(&[(-1, 1), (1, -2)]).to_string(), "-2*q + q^-1");
        assert_eq!(LaurentPoly::<Rational>::zero().to_string(), "0");
    }
}
