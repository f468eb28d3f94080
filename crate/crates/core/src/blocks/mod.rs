//! Block descriptors: the pairs of a block with their supports, closure
//! order, normalization exponents and optional `A(u)` character tables.
//!
//! Built-in generators cover principal blocks of `GL_n`, the blocks of
//! `SL_n` attached to a divisor `d` of `n`, and products of blocks (Levi
//! subgroups). Everything else is ingested through the JSON descriptor
//! format in [`format`].

pub mod format;
mod generators;
pub mod subregular;

use std::collections::HashMap;
use std::ops::Range;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{ExactScalar, Field, Rational, Ring};
use crate::weyl::{CoxeterDescriptor, WeylGroup};

pub use format::{block_from_json, block_to_json, load_block};
pub use generators::{
    gl_levi_block, gl_principal_block, product_block, sl_block, sl_block_with_y, MAX_BLOCK_N,
};
pub use subregular::{
    subregular_dataset, subregular_lookup, SubregularDataset, SubregularRecord, SubregularSystem,
};

/// Dimensions attached to a block.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dims {
    /// `dim Z_L^0 - dim Z_G^0`, the dimension of the reflection module.
    pub l: usize,
    /// `dim Z_L^0`.
    pub dim_zl: usize,
    /// `dim Z_G^0`.
    pub central_rank: usize,
    /// `F_q`-rank of `G` (all groups are split).
    pub rank: usize,
}

/// One pair `(C, zeta)` of a block, in serialized form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawPair {
    pub id: String,
    pub support: String,
    /// Label of the associated character of `W_G(L)`.
    pub phi: String,
    pub c: Rational,
    pub a: u64,
    /// Id of the pair whose character is `sgn * phi`.
    pub dual: String,
    pub eps: i64,
}

/// `A(u)`-character values for the pairs supported on one class.
#[derive(Debug, Clone, PartialEq)]
pub struct RawYTable {
    pub support: String,
    /// Labels of the rational classes `u_a` in `C^F`.
    pub classes: Vec<String>,
    pub rows: Vec<(String, Vec<ExactScalar>)>,
}

/// Serialized block descriptor, before validation.
#[derive(Debug, Clone, PartialEq)]
pub struct RawBlock {
    pub name: String,
    pub coxeter: String,
    pub pairs: Vec<RawPair>,
    /// Covering relations `(lower, upper)` between support labels.
    pub closure_order: Vec<(String, String)>,
    pub total_order: Vec<String>,
    pub dims: Dims,
    pub y_table: Vec<RawYTable>,
}

/// Validated pair; `phi` and `dual` are indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairDescriptor {
    pub id: String,
    pub support: String,
    /// Index of `phi` among the characters of `W_G(L)`.
    pub phi: usize,
    /// `2 c`.
    pub twice_c: i64,
    pub a: u64,
    /// Index of the dual pair in the block.
    pub dual: usize,
    pub eps: i64,
}

impl PairDescriptor {
    pub fn c(&self) -> Rational {
        Rational::new(self.twice_c.into(), 2.into())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct YTable {
    pub support: String,
    pub classes: Vec<String>,
    /// Pair indices and their values on `classes`.
    pub rows: Vec<(usize, Vec<ExactScalar>)>,
}

/// Validated block with pairs stored in the chosen total order.
#[derive(Debug, Clone)]
pub struct BlockDescriptor {
    name: String,
    group: Arc<WeylGroup>,
    pairs: Vec<PairDescriptor>,
    supports: Vec<String>,
    support_of: Vec<usize>,
    closure: Vec<(String, String)>,
    /// `below[i][j]`: support `i` lies in the closure of support `j`.
    below: Vec<Vec<bool>>,
    dims: Dims,
    y_tables: Vec<YTable>,
    index: HashMap<String, usize>,
}

impl PartialEq for BlockDescriptor {
    fn eq(&self, other: &Self) -> bool {
        self.to_raw() == other.to_raw()
    }
}

impl BlockDescriptor {
    /// Validates a serialized descriptor. Violations are reported with the
    /// path of the offending field.
    pub fn from_raw(raw: &RawBlock) -> Result<Self> {
        let desc: CoxeterDescriptor = raw
            .coxeter
            .parse()
            .map_err(|e: Error| Error::parse("coxeter", e.to_string()))?;
        let group = WeylGroup::build(&desc).map_err(|e| Error::parse("coxeter", e.to_string()))?;
        let mut by_id: HashMap<&str, usize> = HashMap::new();
        for (i, p) in raw.pairs.iter().enumerate() {
            if by_id.insert(p.id.as_str(), i).is_some() {
                return Err(Error::invariant(
                    format!("pairs[{i}].id"),
                    format!("duplicate id {:?}", p.id),
                ));
            }
        }
        if raw.pairs.len() != group.characters().len() {
            return Err(Error::invariant(
                "pairs",
                format!(
                    "{} pairs for {} irreducible characters",
                    raw.pairs.len(),
                    group.characters().len()
                ),
            ));
        }
        // total order
        if raw.total_order.len() != raw.pairs.len() {
            return Err(Error::invariant(
                "total_order",
                "must list every pair exactly once",
            ));
        }
        let mut order = Vec::with_capacity(raw.pairs.len());
        let mut seen = vec![false; raw.pairs.len()];
        for (k, id) in raw.total_order.iter().enumerate() {
            let i = *by_id.get(id.as_str()).ok_or_else(|| {
                Error::invariant(format!("total_order[{k}]"), format!("unknown pair {id:?}"))
            })?;
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::invariant(
                    format!("total_order[{k}]"),
                    format!("pair {id:?} repeated"),
                ));
            }
            order.push(i);
        }
        // characters
        let mut phi_seen = vec![false; group.characters().len()];
        let mut pairs = Vec::with_capacity(order.len());
        for &i in &order {
            let p = &raw.pairs[i];
            let path = |f: &str| format!("pairs[{i}].{f}");
            let phi = group.char_by_label(&p.phi).ok_or_else(|| {
                Error::invariant(path("phi"), format!("no character {:?} of {}", p.phi, desc))
            })?;
            if std::mem::replace(&mut phi_seen[phi], true) {
                return Err(Error::invariant(
                    path("phi"),
                    format!("character {:?} used twice", p.phi),
                ));
            }
            let two_c = p.c.clone() * Rational::from_integer(2.into());
            if !two_c.is_integer() {
                return Err(Error::invariant(path("c"), "c must be a half-integer"));
            }
            if p.a == 0 {
                return Err(Error::invariant(path("a"), "a must be positive"));
            }
            if p.eps != 1 && p.eps != -1 {
                return Err(Error::invariant(path("eps"), "eps must be +1 or -1"));
            }
            pairs.push(PairDescriptor {
                id: p.id.clone(),
                support: p.support.clone(),
                phi,
                twice_c: i64::try_from(two_c.to_integer())
                    .map_err(|_| Error::invariant(path("c"), "too large"))?,
                a: p.a,
                dual: 0,
                eps: p.eps,
            });
        }
        let index: HashMap<String, usize> = pairs
            .iter()
            .enumerate()
            .map(|(k, p)| (p.id.clone(), k))
            .collect();
        for (k, &i) in order.iter().enumerate() {
            let p = &raw.pairs[i];
            let d = *index.get(&p.dual).ok_or_else(|| {
                Error::invariant(
                    format!("pairs[{i}].dual"),
                    format!("unknown pair {:?}", p.dual),
                )
            })?;
            pairs[k].dual = d;
        }
        for (k, &i) in order.iter().enumerate() {
            let p = &pairs[k];
            if pairs[p.dual].dual != k {
                return Err(Error::invariant(
                    format!("pairs[{i}].dual"),
                    "duality is not an involution",
                ));
            }
            if group.tensor_with_sign(p.phi) != pairs[p.dual].phi {
                return Err(Error::invariant(
                    format!("pairs[{i}].dual"),
                    "dual character is not sgn * phi",
                ));
            }
        }
        // supports, contiguity
        let mut supports: Vec<String> = Vec::new();
        let mut support_of = Vec::with_capacity(pairs.len());
        for (k, p) in pairs.iter().enumerate() {
            match supports.iter().position(|s| *s == p.support) {
                Some(s) if s + 1 == supports.len() => support_of.push(s),
                Some(_) => {
                    return Err(Error::invariant(
                        format!("total_order[{k}]"),
                        format!("pairs supported on {:?} are not contiguous", p.support),
                    ))
                }
                None => {
                    supports.push(p.support.clone());
                    support_of.push(supports.len() - 1);
                }
            }
        }
        for (k, p) in pairs.iter().enumerate() {
            let first = support_of.iter().position(|&s| s == support_of[k]).unwrap();
            if pairs[first].twice_c != p.twice_c {
                return Err(Error::invariant(
                    format!("pairs[{}].c", order[k]),
                    "c differs on one support",
                ));
            }
        }
        // closure order
        let ns = supports.len();
        let mut below = vec![vec![false; ns]; ns];
        for (i, row) in below.iter_mut().enumerate() {
            row[i] = true;
        }
        for (k, (lo, hi)) in raw.closure_order.iter().enumerate() {
            let find = |s: &str| {
                supports.iter().position(|x| x == s).ok_or_else(|| {
                    Error::invariant(
                        format!("closure_order[{k}]"),
                        format!("unknown support {s:?}"),
                    )
                })
            };
            let (a, b) = (find(lo)?, find(hi)?);
            if a == b {
                return Err(Error::invariant(
                    format!("closure_order[{k}]"),
                    "relation is not strict",
                ));
            }
            below[a][b] = true;
        }
        for m in 0..ns {
            for i in 0..ns {
                if below[i][m] {
                    for j in 0..ns {
                        if below[m][j] {
                            below[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..ns {
            for j in 0..ns {
                if i != j && below[i][j] {
                    if below[j][i] {
                        return Err(Error::invariant("closure_order", "relation has a cycle"));
                    }
                    if i > j {
                        return Err(Error::invariant(
                            "total_order",
                            format!(
                                "{:?} precedes {:?} but lies above it in the closure order",
                                supports[j], supports[i]
                            ),
                        ));
                    }
                    let (ci, cj) = (
                        pairs[first_of(&support_of, i)].twice_c,
                        pairs[first_of(&support_of, j)].twice_c,
                    );
                    if ci <= cj {
                        return Err(Error::invariant(
                            "pairs",
                            format!(
                                "c must strictly decrease from {:?} up to {:?}",
                                supports[i], supports[j]
                            ),
                        ));
                    }
                }
            }
        }
        let l = group.rank();
        let d = raw.dims;
        if d.l != l {
            return Err(Error::invariant(
                "dims.l",
                format!("l = {} but the reflection module has rank {l}", d.l),
            ));
        }
        if d.dim_zl < d.l || d.dim_zl - d.l != d.central_rank {
            return Err(Error::invariant("dims", "need dimZL = l + central_rank"));
        }
        if d.rank < d.central_rank {
            return Err(Error::invariant("dims.rank", "rank below central rank"));
        }
        let mut block = BlockDescriptor {
            name: raw.name.clone(),
            group,
            pairs,
            supports,
            support_of,
            closure: raw.closure_order.clone(),
            below,
            dims: d,
            y_tables: Vec::new(),
            index,
        };
        block.y_tables = raw
            .y_table
            .iter()
            .enumerate()
            .map(|(k, t)| block.check_y_table(k, t))
            .collect::<Result<_>>()?;
        Ok(block)
    }

    fn check_y_table(&self, k: usize, t: &RawYTable) -> Result<YTable> {
        let path = |f: &str| format!("y_table[{k}]{f}");
        let s = self
            .supports
            .iter()
            .position(|x| *x == t.support)
            .ok_or_else(|| {
                Error::invariant(path(".support"), format!("unknown support {:?}", t.support))
            })?;
        let mut rows = Vec::new();
        for (r, (id, vals)) in t.rows.iter().enumerate() {
            let i = *self.index.get(id).ok_or_else(|| {
                Error::invariant(
                    path(&format!(".rows[{r}].pair")),
                    format!("unknown pair {id:?}"),
                )
            })?;
            if self.support_of[i] != s {
                return Err(Error::invariant(
                    path(&format!(".rows[{r}].pair")),
                    "pair has another support",
                ));
            }
            if vals.len() != t.classes.len() {
                return Err(Error::invariant(
                    path(&format!(".rows[{r}].values")),
                    "one value per class required",
                ));
            }
            rows.push((i, vals.clone()));
        }
        let expected = self.support_of.iter().filter(|&&x| x == s).count();
        if rows.len() != expected {
            return Err(Error::invariant(
                path(".rows"),
                format!("{expected} rows required"),
            ));
        }
        for (r, (i, x)) in rows.iter().enumerate() {
            for (j, y) in &rows {
                let mut acc = ExactScalar::zero();
                for (u, v) in x.iter().zip(y) {
                    acc = acc + &(u.clone() * &v.conj());
                }
                let a = ExactScalar::rational(Rational::from_integer(self.pairs[*i].a.into()));
                let value = acc * &a.try_inv().expect("a > 0");
                let expect = if i == j {
                    ExactScalar::one()
                } else {
                    ExactScalar::zero()
                };
                if value != expect {
                    return Err(Error::invariant(
                        path(&format!(".rows[{r}]")),
                        "rows are not orthonormal",
                    ));
                }
            }
        }
        Ok(YTable {
            support: t.support.clone(),
            classes: t.classes.clone(),
            rows,
        })
    }

    /// Serialized form; the inverse of [`BlockDescriptor::from_raw`].
    pub fn to_raw(&self) -> RawBlock {
        RawBlock {
            name: self.name.clone(),
            coxeter: self.group.descriptor().to_string(),
            pairs: self
                .pairs
                .iter()
                .map(|p| RawPair {
                    id: p.id.clone(),
                    support: p.support.clone(),
                    phi: self.group.characters()[p.phi].label.clone(),
                    c: p.c(),
                    a: p.a,
                    dual: self.pairs[p.dual].id.clone(),
                    eps: p.eps,
                })
                .collect(),
            closure_order: self.closure.clone(),
            total_order: self.pairs.iter().map(|p| p.id.clone()).collect(),
            dims: self.dims,
            y_table: self
                .y_tables
                .iter()
                .map(|t| RawYTable {
                    support: t.support.clone(),
                    classes: t.classes.clone(),
                    rows: t
                        .rows
                        .iter()
                        .map(|(i, v)| (self.pairs[*i].id.clone(), v.clone()))
                        .collect(),
                })
                .collect(),
        }
    }

    /// Same block with another admissible total order.
    pub fn with_total_order(&self, ids: &[&str]) -> Result<Self> {
        let mut raw = self.to_raw();
        raw.total_order = ids.iter().map(|s| s.to_string()).collect();
        Self::from_raw(&raw)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        &self.group
    }

    pub fn pairs(&self) -> &[PairDescriptor] {
        &self.pairs
    }

    pub fn num_pairs(&self) -> usize {
        self.pairs.len()
    }

    pub fn pair(&self, i: usize) -> &PairDescriptor {
        &self.pairs[i]
    }

    pub fn pair_by_id(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    /// Pair whose character is `phi` (an index into the characters of W).
    pub fn pair_of_character(&self, phi: usize) -> usize {
        self.pairs
            .iter()
            .position(|p| p.phi == phi)
            .expect("phi is a bijection")
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    pub fn supports(&self) -> &[String] {
        &self.supports
    }

    pub fn support_index(&self, pair: usize) -> usize {
        self.support_of[pair]
    }

    pub fn same_support(&self, a: usize, b: usize) -> bool {
        self.support_of[a] == self.support_of[b]
    }

    /// `C_kappa` lies in the closure of `C_iota`.
    pub fn in_closure(&self, kappa: usize, iota: usize) -> bool {
        self.below[self.support_of[kappa]][self.support_of[iota]]
    }

    /// Index ranges of pairs with equal support, in total order.
    pub fn support_groups(&self) -> Vec<Range<usize>> {
        let mut out: Vec<Range<usize>> = Vec::new();
        for (k, &s) in self.support_of.iter().enumerate() {
            match out.last_mut() {
                Some(r) if self.support_of[r.start] == s => r.end = k + 1,
                _ => out.push(k..k + 1),
            }
        }
        out
    }

    pub fn closure_order(&self) -> &[(String, String)] {
        &self.closure
    }

    pub fn y_tables(&self) -> &[YTable] {
        &self.y_tables
    }

    pub fn y_table(&self, support: &str) -> Option<&YTable> {
        self.y_tables.iter().find(|t| t.support == support)
    }

    /// Pair supported on the regular class with trivial character, if the
    /// block has one: the unique pair whose support is maximal and whose
    /// character is trivial.
    pub fn regular_pair(&self) -> Option<usize> {
        let triv = self.group.trivial_char();
        let k = self.pair_of_character(triv);
        let s = self.support_of[k];
        let maximal = (0..self.supports.len()).all(|t| self.below[t][s]);
        maximal.then_some(k)
    }

    /// `q^{c}` as a rational power; `None` when `c` is not an integer.
    pub fn c_int(&self, pair: usize) -> Option<i64> {
        let t = self.pairs[pair].twice_c;
        (t % 2 == 0).then_some(t / 2)
    }
}

fn first_of(support_of: &[usize], s: usize) -> usize {
    support_of.iter().position(|&x| x == s).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl2_block() {
        let b = gl_principal_block(2).unwrap();
        let ids: Vec<_> = b.pairs().iter().map(|p| p.id.as_str()).collect();
        assert_eq!(ids, ["1+1", "2"]);
        assert_eq!(
            b.pairs().iter().map(|p| p.c()).collect::<Vec<_>>(),
            vec![Rational::one(), Rational::zero()]
        );
        assert!(b.in_closure(0, 1));
        assert!(!b.in_closure(1, 0));
        assert_eq!(b.regular_pair(), Some(1));
    }

    #[test]
    fn support_groups_are_contiguous() {
        let b = gl_principal_block(4).unwrap();
        assert_eq!(b.support_groups().len(), 5);
    }
}
