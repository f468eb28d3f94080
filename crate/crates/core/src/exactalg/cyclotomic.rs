use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use num_integer::Integer;
use num_traits::{One, Zero};

use super::laurent::dense_divrem;
use super::{Field, Rational, Ring};

/// Integer coefficients of the `n`-th cyclotomic polynomial, constant term first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<i64>>>> = OnceLock::new();
    assert!(n >= 1, "cyclotomic polynomial index must be positive");
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by all proper-divisor cyclotomic polynomials
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = int_div(&p, &cyclotomic_polynomial(d));
        }
    }
    cache.lock().unwrap().insert(n, p.clone());
    p
}

fn int_div(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut r = a.to_vec();
    let mut q = vec![0i64; a.len() - b.len() + 1];
    for i in (0..q.len()).rev() {
        let c = r[i + b.len() - 1];
        for (j, bj) in b.iter().enumerate() {
            r[i + j] -= c * bj;
        }
        q[i] = c;
    }
    debug_assert!(r.iter().all(|&c| c == 0));
    q
}

/// Exact scalar: an element of the cyclotomic field `Q(zeta_N)`.
///
/// Stored as a polynomial in `zeta_N` reduced modulo the `N`-th cyclotomic
/// polynomial. Rational values always use conductor 1. Equality compares
/// values, lifting to a common conductor when the conductors differ.
#[derive(Clone)]
pub struct ExactScalar {
    conductor: u32,
    coeffs: Vec<Rational>,
}

fn reduce(mut v: Vec<Rational>, n: u32) -> Vec<Rational> {
    let phi: Vec<Rational> = cyclotomic_polynomial(n)
        .into_iter()
        .map(|c| Rational::from_integer(c.into()))
        .collect();
    if v.len() >= phi.len() {
        v = dense_divrem(&v, &phi).1;
    }
    v.resize(phi.len() - 1, Rational::zero());
    v
}

impl ExactScalar {
    pub fn rational(r: Rational) -> Self {
        ExactScalar {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    pub fn int(n: i64) -> Self {
        Self::rational(Rational::from_integer(n.into()))
    }

    /// `zeta_n^k` with `zeta_n = exp(2 pi i / n)`.
    pub fn zeta(n: u32, k: i64) -> Self {
        let e = k.rem_euclid(n as i64) as usize;
        let mut v = vec![Rational::zero(); e + 1];
        v[e] = Rational::one();
        Self::from_power_basis(n, v)
    }

    /// Element `sum_i coeffs[i] zeta_n^i`; any length is accepted.
    pub fn from_power_basis(n: u32, coeffs: Vec<Rational>) -> Self {
        assert!(n >= 1, "conductor must be positive");
        ExactScalar {
            conductor: n,
            coeffs: reduce(coeffs, n),
        }
        .demote()
    }

    fn demote(self) -> Self {
        if self.conductor == 1 || self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            let c0 = self
                .coeffs
                .into_iter()
                .next()
                .unwrap_or_else(Rational::zero);
            ExactScalar {
                conductor: 1,
                coeffs: vec![c0],
            }
        } else {
            self
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Coefficients in the power basis of `zeta_conductor`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.conductor == 1 {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    /// Coordinates in the power basis of the `m`-th cyclotomic field, for `m`
    /// a multiple of the conductor.
    pub fn lift(&self, m: u32) -> Vec<Rational> {
        assert!(
            m.is_multiple_of(self.conductor),
            "conductor {} does not divide {m}",
            self.conductor
        );
        if m == self.conductor {
            return self.coeffs.clone();
        }
        let step = (m / self.conductor) as usize;
        let mut v = vec![Rational::zero(); step * self.coeffs.len().max(1)];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * step] = c.clone();
        }
        reduce(v, m)
    }

    fn common(&self, o: &Self) -> (u32, Vec<Rational>, Vec<Rational>) {
        let m = self.conductor.lcm(&o.conductor);
        (m, self.lift(m), o.lift(m))
    }

    fn combine(&self, o: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        let (m, a, b) = self.common(o);
        Self::from_power_basis(m, a.iter().zip(&b).map(|(x, y)| f(x, y)).collect())
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(r) = self.as_rational() {
            return Some(Self::rational(r.recip()));
        }
        // s * a + t * phi = 1 by the extended Euclidean algorithm over Q
        let phi: Vec<Rational> = cyclotomic_polynomial(self.conductor)
            .into_iter()
            .map(|c| Rational::from_integer(c.into()))
            .collect();
        let (mut r0, mut r1) = (phi, trimmed(self.coeffs.clone()));
        let (mut s0, mut s1) = (Vec::<Rational>::new(), vec![Rational::one()]);
        while !r1.is_empty() {
            let (q, r) = dense_divrem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
        }
        debug_assert_eq!(r0.len(), 1);
        let c = r0[0].recip();
        Some(Self::from_power_basis(
            self.conductor,
            s0.into_iter().map(|x| x * &c).collect(),
        ))
    }
}

fn trimmed(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trimmed(out)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trimmed(out)
}

impl PartialEq for ExactScalar {
    fn eq(&self, o: &Self) -> bool {
        if self.conductor == o.conductor {
            return self.coeffs == o.coeffs;
        }
        let (_, a, b) = self.common(o);
        a == b
    }
}

impl Eq for ExactScalar {}

impl From<Rational> for ExactScalar {
    fn from(r: Rational) -> Self {
        Self::rational(r)
    }
}

impl Zero for ExactScalar {
    fn zero() -> Self {
        Self::int(0)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl One for ExactScalar {
    fn one() -> Self {
        Self::int(1)
    }
}

impl Add<&ExactScalar> for ExactScalar {
    type Output = ExactScalar;
    fn add(self, o: &ExactScalar) -> ExactScalar {
        self.combine(o, |x, y| x + y)
    }
}

impl Sub<&ExactScalar> for ExactScalar {
    type Output = ExactScalar;
    fn sub(self, o: &ExactScalar) -> ExactScalar {
        self.combine(o, |x, y| x - y)
    }
}

impl Mul<&ExactScalar> for ExactScalar {
    type Output = ExactScalar;
    fn mul(self, o: &ExactScalar) -> ExactScalar {
        if let (Some(a), Some(b)) = (self.as_rational(), o.as_rational()) {
            return Self::rational(a * b);
        }
        let (m, a, b) = self.common(o);
        Self::from_power_basis(m, poly_mul(&a, &b))
    }
}

impl Add for ExactScalar {
    type Output = ExactScalar;
    fn add(self, o: ExactScalar) -> ExactScalar {
        self + &o
    }
}

impl Sub for ExactScalar {
    type Output = ExactScalar;
    fn sub(self, o: ExactScalar) -> ExactScalar {
        self - &o
    }
}

impl Mul for ExactScalar {
    type Output = ExactScalar;
    fn mul(self, o: ExactScalar) -> ExactScalar {
        self * &o
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar {
            conductor: self.conductor,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Ring for ExactScalar {
    /// `zeta -> zeta^{-1}`.
    fn conj(&self) -> Self {
        if self.is_rational() {
            return self.clone();
        }
        let n = self.conductor as usize;
        let mut v = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[(n - i) % n] += c;
        }
        Self::from_power_basis(self.conductor, v)
    }
    fn from_rational(r: &Rational) -> Self {
        Self::rational(r.clone())
    }
}

impl Field for ExactScalar {
    fn try_inv(&self) -> Option<Self> {
        self.inv()
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rational::zero();
            let a = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    write!(f, "E({})", self.conductor)?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactScalar({self})")
    }
}
