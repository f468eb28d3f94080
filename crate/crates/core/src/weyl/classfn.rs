use std::sync::Arc;

use super::fusion::Fusion;
use super::group::WeylGroup;
use crate::error::{Error, Result};
use crate::exactalg::{Rational, Ring};

/// Class function on a Weyl group with values in a ring (rationals, Laurent
/// polynomials or rational functions in `q`).
#[derive(Clone, Debug)]
pub struct ClassFunction<T> {
    group: Arc<WeylGroup>,
    values: Vec<T>,
}

pub(crate) fn same_group(a: &Arc<WeylGroup>, b: &Arc<WeylGroup>) -> bool {
    Arc::ptr_eq(a, b) || a.descriptor() == b.descriptor()
}

impl<T: Ring> ClassFunction<T> {
    pub fn new(group: Arc<WeylGroup>, values: Vec<T>) -> Result<Self> {
        if values.len() != group.num_classes() {
            return Err(Error::Malformed(format!(
                "class function has {} values for {} classes",
                values.len(),
                group.num_classes()
            )));
        }
        Ok(ClassFunction { group, values })
    }

    pub fn from_fn(group: Arc<WeylGroup>, f: impl Fn(usize) -> T) -> Self {
        let values = (0..group.num_classes()).map(f).collect();
        ClassFunction { group, values }
    }

    /// Irreducible character number `idx`.
    pub fn character(group: Arc<WeylGroup>, idx: usize) -> Self {
        let values = group.characters()[idx]
            .values
            .iter()
            .map(|&v| T::from_int(v))
            .collect();
        ClassFunction { group, values }
    }

    pub fn constant(group: Arc<WeylGroup>, c: T) -> Self {
        Self::from_fn(group, |_| c.clone())
    }

    /// Indicator of class `idx`.
    pub fn indicator(group: Arc<WeylGroup>, idx: usize) -> Self {
        Self::from_fn(group, |i| if i == idx { T::one() } else { T::zero() })
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        &self.group
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &T {
        &self.values[class]
    }

    fn check(&self, o: &Self) -> Result<()> {
        if same_group(&self.group, &o.group) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    /// `|W|^{-1} sum_w f(w) conj(g(w))`.
    pub fn inner_product(&self, o: &Self) -> Result<T> {
        self.check(o)?;
        let mut acc = T::zero();
        for ((c, a), b) in self.group.classes().iter().zip(&self.values).zip(&o.values) {
            let term = a.clone() * &b.conj();
            acc = acc + &(term * &T::from_int(c.size as i64));
        }
        Ok(acc * &T::from_rational(&Rational::new(1.into(), (self.group.order() as i64).into())))
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(self.zip(o, |a, b| a.clone() * b))
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(self.zip(o, |a, b| a.clone() + b))
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(self.zip(o, |a, b| a.clone() - b.clone()))
    }

    fn zip(&self, o: &Self, f: impl Fn(&T, &T) -> T) -> Self {
        ClassFunction {
            group: self.group.clone(),
            values: self
                .values
                .iter()
                .zip(&o.values)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|v| v.clone() * s)
    }

    pub fn conj(&self) -> Self {
        self.map(|v| v.conj())
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> ClassFunction<U> {
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().map(f).collect(),
        }
    }

    /// Multiplication by the sign character.
    pub fn twist_by_sign(&self) -> Self {
        let s = self.group.sign_values();
        ClassFunction {
            group: self.group.clone(),
            values: self
                .values
                .iter()
                .zip(s)
                .map(|(v, s)| if s < 0 { -v.clone() } else { v.clone() })
                .collect(),
        }
    }

    /// Coefficients of this function on the irreducible characters.
    pub fn decompose(&self) -> Vec<T> {
        (0..self.group.characters().len())
            .map(|i| {
                self.inner_product(&ClassFunction::character(self.group.clone(), i))
                    .expect("same group")
            })
            .collect()
    }
}

/// Restriction along a fusion map.
pub fn fusion_restrict<T: Ring>(f: &ClassFunction<T>, fusion: &Fusion) -> Result<ClassFunction<T>> {
    if !same_group(f.group(), fusion.ambient()) {
        return Err(Error::GroupMismatch);
    }
    let values = fusion.map().iter().map(|&c| f.values[c].clone()).collect();
    ClassFunction::new(fusion.sub().clone(), values)
}

/// Induction along a fusion map:
/// `Ind f (C) = |C_W(w)| sum_{c -> C} f(c) / |C_H(c)|`.
pub fn induce<T: Ring>(f: &ClassFunction<T>, fusion: &Fusion) -> Result<ClassFunction<T>> {
    if !same_group(f.group(), fusion.sub()) {
        return Err(Error::GroupMismatch);
    }
    let amb = fusion.ambient();
    let sub = fusion.sub();
    let mut values = vec![T::zero(); amb.num_classes()];
    for (c, &target) in fusion.map().iter().enumerate() {
        let factor = Rational::new(
            (amb.classes()[target].centralizer as i64).into(),
            (sub.classes()[c].centralizer as i64).into(),
        );
        values[target] =
            values[target].clone() + &(f.values[c].clone() * &T::from_rational(&factor));
    }
    ClassFunction::new(amb.clone(), values)
}
