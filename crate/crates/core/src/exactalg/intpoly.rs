//! Dense integer polynomials used for GCD computations.
//!
//! The GCD first tries the evaluation heuristic of Char, Geddes and Gonnet,
//! which is fast for the small-coefficient products of cyclotomic
//! polynomials that dominate here, and falls back to a primitive remainder
//! sequence.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// Coefficients from the constant term up, no trailing zeros.
pub(crate) type ZPoly = Vec<BigInt>;

fn trim(p: &mut ZPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Primitive part with positive leading coefficient.
fn primitive(p: &[BigInt]) -> ZPoly {
    let mut g = content(p);
    if g.is_zero() {
        return Vec::new();
    }
    if p.last().is_some_and(|c| c.is_negative()) {
        g = -g;
    }
    let mut out: ZPoly = p.iter().map(|c| c / &g).collect();
    trim(&mut out);
    out
}

fn eval(p: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn max_norm(p: &[BigInt]) -> BigInt {
    p.iter().map(|c| c.abs()).max().unwrap_or_default()
}

/// Exact quotient over the integers, `None` if `b` does not divide `a`.
fn exact_div(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let mut r = a.to_vec();
    let lead = b.last().unwrap();
    let mut q = vec![BigInt::zero(); a.len() - b.len() + 1];
    for i in (0..q.len()).rev() {
        let top = &r[i + b.len() - 1];
        if top.is_zero() {
            continue;
        }
        let (c, rem) = top.div_rem(lead);
        if !rem.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            r[i + j] -= &c * bj;
        }
        q[i] = c;
    }
    if r.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut q);
    Some(q)
}

/// Pseudo-remainder of `a` by `b`.
fn prem(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let mut r = a.to_vec();
    let lead = b.last().unwrap().clone();
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let top = r.last().unwrap().clone();
        for c in r.iter_mut() {
            *c *= &lead;
        }
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &top * bj;
        }
        trim(&mut r);
    }
    r
}

fn gcd_prs(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let (mut a, mut b) = if a.len() >= b.len() {
        (primitive(a), primitive(b))
    } else {
        (primitive(b), primitive(a))
    };
    while !b.is_empty() {
        let r = prem(&a, &b);
        a = b;
        b = primitive(&r);
    }
    primitive(&a)
}

/// Symmetric base-`xi` digits of `gamma` as polynomial coefficients.
fn genpoly(mut gamma: BigInt, xi: &BigInt) -> ZPoly {
    let half = xi >> 1u32;
    let mut out = Vec::new();
    while !gamma.is_zero() {
        let mut r = gamma.mod_floor(xi);
        if r > half {
            r -= xi;
        }
        out.push(r.clone());
        gamma = (gamma - r) / xi;
    }
    out
}

fn gcd_heuristic(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    let bound = max_norm(a).min(max_norm(b));
    let mut xi: BigInt = bound * 2u32 + 29u32;
    let deg = a.len().max(b.len()) as u64;
    for _ in 0..6 {
        if xi.bits() * deg > 200_000 {
            return None;
        }
        let gamma = eval(a, &xi).gcd(&eval(b, &xi));
        let g = primitive(&genpoly(gamma, &xi));
        if !g.is_empty() && exact_div(a, &g).is_some() && exact_div(b, &g).is_some() {
            return Some(g);
        }
        xi = xi * 73794u32 / 27011u32;
    }
    None
}

/// Primitive GCD of two integer polynomials with positive leading coefficient.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() {
        return primitive(b);
    }
    if b.is_empty() {
        return primitive(a);
    }
    if a.len() == 1 || b.len() == 1 {
        return vec![BigInt::one()];
    }
    let (pa, pb) = (primitive(a), primitive(b));
    if pa == pb {
        return pa;
    }
    gcd_heuristic(&pa, &pb).unwrap_or_else(|| gcd_prs(&pa, &pb))
}

/// Clears denominators: returns an integer polynomial proportional to `p`.
pub(crate) fn to_integer(p: &[Rational]) -> ZPoly {
    let l = p.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let mut out: ZPoly = p
        .iter()
        .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
        .collect();
    trim(&mut out);
    out
}

/// Monic GCD over the rationals of two dense rational polynomials.
pub(crate) fn gcd_rational(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let g = gcd(&to_integer(a), &to_integer(b));
    let lead = Rational::from_integer(g.last().cloned().unwrap_or_else(BigInt::one));
    g.iter()
        .map(|c| Rational::from_integer(c.clone()) / &lead)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: &[i64]) -> ZPoly {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn gcd_of_products() {
        // (x-1)(x+1)(x^2+x+1) and (x+1)^2(x^2+x+1)
        let a = z(&[-1, -1, 0, 1, 1]);
        let b = z(&[1, 3, 4, 3, 1]);
        assert_eq!(gcd(&a, &b), z(&[1, 2, 2, 1]));
    }

    #[test]
    fn coprime() {
        assert_eq!(gcd(&z(&[-1, 1]), &z(&[1, 1])), z(&[1]));
        assert_eq!(gcd(&z(&[2, 4]), &z(&[6, 3])), z(&[1]));
    }

    #[test]
    fn prs_agrees_with_heuristic() {
        let a = z(&[6, -5, 0, 3, -1, 2]);
        let b = z(&[-4, 1, 7, 2]);
        let g1 = gcd_prs(&primitive(&a), &primitive(&b));
        let g2 = gcd(&a, &b);
        assert_eq!(g1, g2);
        let m = z(&[3, 0, 1]);
        let ma = mul(&a, &m);
        let mb = mul(&b, &m);
        assert_eq!(gcd_prs(&ma, &mb), gcd(&ma, &mb));
        assert_eq!(gcd(&ma, &mb), m);
    }

    fn mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }
}
