//! JSON encodings of exact values.
//!
//! Rationals are strings `"p/q"` (or `"p"`), cyclotomic numbers are objects
//! `{"conductor": N, "coefficients": [...]}`, Laurent polynomials are sparse
//! `{"exponents": [...], "coefficients": [...]}` objects, and rational
//! functions carry a `numerator` and a `denominator`.

use serde_json::{json, Value};

use super::{ExactScalar, Field, LaurentPoly, Rational, RationalFunction};
use crate::error::{Error, Result};

pub fn rational_to_string(r: &Rational) -> String {
    r.to_string()
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| Error::Malformed(format!("not a rational number: {s:?}")))
}

/// Values with a fixed JSON encoding.
pub trait Json: Sized {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

impl Json for Rational {
    fn to_json(&self) -> Value {
        Value::String(rational_to_string(self))
    }
    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => parse_rational(s),
            Value::Number(n) => n
                .as_i64()
                .map(|i| Rational::from_integer(i.into()))
                .ok_or_else(|| Error::Malformed(format!("non-integer number {n}"))),
            _ => Err(Error::Malformed(format!("expected rational, found {v}"))),
        }
    }
}

impl Json for ExactScalar {
    fn to_json(&self) -> Value {
        match self.as_rational() {
            Some(r) => r.to_json(),
            None => json!({
                "conductor": self.conductor(),
                "coefficients": self.coeffs().iter().map(Json::to_json).collect::<Vec<_>>(),
            }),
        }
    }
    fn from_json(v: &Value) -> Result<Self> {
        if let Value::Object(m) = v {
            let n = m
                .get("conductor")
                .and_then(Value::as_u64)
                .filter(|&n| n >= 1)
                .ok_or_else(|| {
                    Error::Malformed("cyclotomic number needs a positive conductor".into())
                })?;
            let coeffs = m
                .get("coefficients")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Malformed("cyclotomic number needs coefficients".into()))?
                .iter()
                .map(Rational::from_json)
                .collect::<Result<Vec<_>>>()?;
            return Ok(ExactScalar::from_power_basis(n as u32, coeffs));
        }
        Rational::from_json(v).map(ExactScalar::rational)
    }
}

impl<C: Field + Json> Json for LaurentPoly<C> {
    fn to_json(&self) -> Value {
        json!({
            "exponents": self.terms().iter().map(|t| t.0).collect::<Vec<_>>(),
            "coefficients": self.terms().iter().map(|t| t.1.to_json()).collect::<Vec<_>>(),
        })
    }
    fn from_json(v: &Value) -> Result<Self> {
        let exps = v
            .get("exponents")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Malformed("polynomial needs exponents".into()))?;
        let coeffs = v
            .get("coefficients")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Malformed("polynomial needs coefficients".into()))?;
        if exps.len() != coeffs.len() {
            return Err(Error::Malformed(
                "exponent and coefficient lists differ in length".into(),
            ));
        }
        let mut terms = Vec::with_capacity(exps.len());
        for (e, c) in exps.iter().zip(coeffs) {
            let e = e
                .as_i64()
                .ok_or_else(|| Error::Malformed(format!("bad exponent {e}")))?;
            terms.push((e, C::from_json(c)?));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

impl Json for RationalFunction {
    fn to_json(&self) -> Value {
        json!({ "numerator": self.numer().to_json(), "denominator": self.denom().to_json() })
    }
    fn from_json(v: &Value) -> Result<Self> {
        let n = v
            .get("numerator")
            .ok_or_else(|| Error::Malformed("missing numerator".into()))?;
        let d = v
            .get("denominator")
            .ok_or_else(|| Error::Malformed("missing denominator".into()))?;
        RationalFunction::new(LaurentPoly::from_json(n)?, LaurentPoly::from_json(d)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{lp, ratio};

    #[test]
    fn polynomial_round_trip() {
        let p = lp(&[(-1, 3), (2, -1)]).scale(&ratio(1, 3));
        let v = p.to_json();
        assert_eq!(
            v,
            json!({"exponents": [-1, 2], "coefficients": ["1", "-1/3"]})
        );
        assert_eq!(LaurentPoly::<Rational>::from_json(&v).unwrap(), p);
    }

    #[test]
    fn cyclotomic_round_trip() {
        let z = ExactScalar::zeta(3, 2);
        let v = z.to_json();
        assert_eq!(v, json!({"conductor": 3, "coefficients": ["-1", "-1"]}));
        assert_eq!(ExactScalar::from_json(&v).unwrap(), z);
        assert_eq!(
            ExactScalar::from_json(&json!("5/2")).unwrap(),
            ExactScalar::rational(ratio(5, 2))
        );
    }

    #[test]
    fn rational_function_round_trip() {
        let f = RationalFunction::new(lp(&[(0, 1)]), lp(&[(2, 1), (0, -1)])).unwrap();
        assert_eq!(RationalFunction::from_json(&f.to_json()).unwrap(), f);
        assert!(parse_rational("x/2").is_err());
    }
}
