use std::sync::Arc;

use super::classfn::{fusion_restrict, ClassFunction};
use super::descriptor::{CoxeterDescriptor, CoxeterFactor, Family};
use super::group::{ClassKey, WeylGroup};
use crate::error::{Error, Result};
use crate::exactalg::Rational;
use num_traits::Zero;

/// Class fusion of a subgroup `H` of a Weyl group `W`: the `W`-class
/// containing each `H`-class.
#[derive(Debug, Clone)]
pub struct Fusion {
    sub: Arc<WeylGroup>,
    ambient: Arc<WeylGroup>,
    map: Vec<usize>,
}

impl Fusion {
    /// Validated fusion map. Every ambient character must restrict to a
    /// non-negative integral combination of irreducible characters of the
    /// subgroup, and class counts must fit.
    pub fn new(sub: Arc<WeylGroup>, ambient: Arc<WeylGroup>, map: Vec<usize>) -> Result<Self> {
        if map.len() != sub.num_classes() {
            return Err(Error::FusionUndefined(format!(
                "map has {} entries for {} classes",
                map.len(),
                sub.num_classes()
            )));
        }
        if !ambient.order().is_multiple_of(sub.order()) {
            return Err(Error::FusionUndefined(
                "subgroup order does not divide group order".into(),
            ));
        }
        if let Some(&bad) = map.iter().find(|&&c| c >= ambient.num_classes()) {
            return Err(Error::FusionUndefined(format!(
                "class index {bad} out of range"
            )));
        }
        if map[0] != 0 {
            return Err(Error::FusionUndefined(
                "identity must fuse to the identity".into(),
            ));
        }
        let f = Fusion { sub, ambient, map };
        for i in 0..f.ambient.characters().len() {
            let chi: ClassFunction<Rational> = ClassFunction::character(f.ambient.clone(), i);
            for m in fusion_restrict(&chi, &f)?.decompose() {
                if !m.is_integer() || m < Rational::zero() {
                    return Err(Error::FusionUndefined(format!(
                        "restriction of {} is not a character",
                        f.ambient.characters()[i].label
                    )));
                }
            }
        }
        Ok(f)
    }

    pub fn sub(&self) -> &Arc<WeylGroup> {
        &self.sub
    }

    pub fn ambient(&self) -> &Arc<WeylGroup> {
        &self.ambient
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// Young subgroup `S_{n_1} x ... x S_{n_r}` of `S_n`.
    pub fn young(composition: &[usize]) -> Result<Self> {
        if composition.is_empty() || composition.contains(&0) {
            return Err(Error::BadComposition(format!("{composition:?}")));
        }
        let n: usize = composition.iter().sum();
        let ambient = WeylGroup::symmetric(n)?;
        let factors = composition
            .iter()
            .map(|&m| CoxeterFactor::new(Family::A, m - 1))
            .collect::<Result<Vec<_>>>()?;
        let sub = WeylGroup::build(&CoxeterDescriptor::new(factors))?;
        let map = sub
            .classes()
            .iter()
            .map(|c| {
                let mut all: Vec<usize> = c
                    .keys
                    .iter()
                    .flat_map(|k| match k {
                        ClassKey::Cycle(p) => p.clone(),
                        _ => unreachable!(),
                    })
                    .collect();
                all.sort_unstable_by(|a, b| b.cmp(a));
                ambient
                    .class_by_keys(&[ClassKey::Cycle(all)])
                    .expect("cycle type")
            })
            .collect();
        Fusion::new(sub, ambient, map)
    }

    /// Standard parabolic subgroup `W(X_k) x S_{m_1} x ... x S_{m_r}` of
    /// `W(X_n)` for `X` in {B, C, D}, with `k + sum m_i = n`. For type D, `k`
    /// is 0 or at least 2.
    pub fn parabolic(family: Family, k: usize, composition: &[usize]) -> Result<Self> {
        if !matches!(family, Family::B | Family::C | Family::D) {
            return Err(Error::Unimplemented(format!(
                "parabolic subgroups of type {family:?}"
            )));
        }
        if composition.contains(&0) || (family == Family::D && k == 1) {
            return Err(Error::BadComposition(format!("k = {k}, {composition:?}")));
        }
        let n = k + composition.iter().sum::<usize>();
        let ambient = WeylGroup::build(&CoxeterDescriptor::single(family, n)?)?;
        let mut factors = Vec::new();
        if k > 0 {
            factors.push(CoxeterFactor::new(family, k)?);
        }
        for &m in composition {
            factors.push(CoxeterFactor::new(Family::A, m - 1)?);
        }
        let sub = WeylGroup::build(&CoxeterDescriptor::new(factors))?;
        let mut map = Vec::new();
        for c in sub.classes() {
            let (mut pos, mut neg, mut split) = (Vec::new(), Vec::new(), None);
            for key in &c.keys {
                match key {
                    ClassKey::Signed {
                        pos: p,
                        neg: q,
                        split: s,
                    } => {
                        pos.extend_from_slice(p);
                        neg.extend_from_slice(q);
                        split = *s;
                    }
                    ClassKey::Cycle(p) => pos.extend_from_slice(p),
                    _ => unreachable!(),
                }
            }
            pos.sort_unstable_by(|a, b| b.cmp(a));
            neg.sort_unstable_by(|a, b| b.cmp(a));
            let ambient_split =
                family == Family::D && neg.is_empty() && pos.iter().all(|p| p % 2 == 0);
            let split = if ambient_split {
                Some(split.unwrap_or(true))
            } else {
                None
            };
            let key = ClassKey::Signed { pos, neg, split };
            map.push(
                ambient
                    .class_by_keys(std::slice::from_ref(&key))
                    .ok_or_else(|| Error::FusionUndefined(format!("{key:?}")))?,
            );
        }
        Fusion::new(sub, ambient, map)
    }
}
