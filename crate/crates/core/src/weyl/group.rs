use std::collections::HashMap;
use std::sync::Arc;

use super::descriptor::{CoxeterDescriptor, CoxeterFactor, Family};
use super::linalg::{block_diag, char_poly, determinant, identity, mat_mul, IntMatrix};
use crate::combinat::{
    bipartition_label, partition_label, partitions, remove_rim_hooks, z_hyperoctahedral,
    z_symmetric, Partition,
};
use crate::error::{Error, Result};

/// Conjugacy class of one irreducible factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ClassKey {
    /// Cycle type in a symmetric group.
    Cycle(Partition),
    /// Positive and negative cycle types of a signed permutation. `split`
    /// distinguishes the two halves of a class of type D that splits.
    Signed {
        pos: Partition,
        neg: Partition,
        split: Option<bool>,
    },
    /// Rotation by `k` steps in a dihedral group.
    Rotation(u32),
    /// Reflection class of a dihedral group, 0 for the class of the first
    /// simple reflection and 1 for the second.
    Reflection(u8),
}

/// Irreducible character of one irreducible factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CharKey {
    Partition(Partition),
    Bipartition {
        left: Partition,
        right: Partition,
        split: Option<bool>,
    },
    Dihedral(String),
}

#[derive(Debug, Clone)]
pub struct ConjugacyClass {
    pub label: String,
    /// One key per factor of the group.
    pub keys: Vec<ClassKey>,
    pub size: u64,
    pub centralizer: u64,
    /// Matrix of a representative on the reflection representation.
    pub representative: IntMatrix,
}

#[derive(Debug, Clone)]
pub struct Character {
    pub label: String,
    pub keys: Vec<CharKey>,
    pub values: Vec<i64>,
}

impl Character {
    pub fn degree(&self) -> i64 {
        self.values[0]
    }
}

/// Finite Weyl group together with its conjugacy classes, character table and
/// reflection representation. The identity class has index 0.
#[derive(Debug)]
pub struct WeylGroup {
    descriptor: CoxeterDescriptor,
    order: u64,
    rank: usize,
    classes: Vec<ConjugacyClass>,
    characters: Vec<Character>,
    class_index: HashMap<Vec<ClassKey>, usize>,
    char_index: HashMap<Vec<CharKey>, usize>,
}

struct Table {
    order: u64,
    rank: usize,
    classes: Vec<ConjugacyClass>,
    characters: Vec<Character>,
}

const LABEL_SEP: &str = " x ";

impl WeylGroup {
    pub fn build(descriptor: &CoxeterDescriptor) -> Result<Arc<WeylGroup>> {
        let mut table = Table::trivial();
        for f in descriptor.factors() {
            let t = factor_table(f)?;
            table = table.tensor(&t);
        }
        let class_index = table
            .classes
            .iter()
            .enumerate()
            .map(|(i, c)| (c.keys.clone(), i))
            .collect();
        let char_index = table
            .characters
            .iter()
            .enumerate()
            .map(|(i, c)| (c.keys.clone(), i))
            .collect();
        Ok(Arc::new(WeylGroup {
            descriptor: descriptor.clone(),
            order: table.order,
            rank: table.rank,
            classes: table.classes,
            characters: table.characters,
            class_index,
            char_index,
        }))
    }

    pub fn symmetric(n: usize) -> Result<Arc<WeylGroup>> {
        Self::build(&CoxeterDescriptor::symmetric(n)?)
    }

    pub fn descriptor(&self) -> &CoxeterDescriptor {
        &self.descriptor
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Dimension of the reflection representation.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn characters(&self) -> &[Character] {
        &self.characters
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_sizes(&self) -> Vec<u64> {
        self.classes.iter().map(|c| c.size).collect()
    }

    pub fn class_by_keys(&self, keys: &[ClassKey]) -> Option<usize> {
        self.class_index.get(keys).copied()
    }

    pub fn char_by_keys(&self, keys: &[CharKey]) -> Option<usize> {
        self.char_index.get(keys).copied()
    }

    pub fn class_by_label(&self, label: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.label == label)
    }

    pub fn char_by_label(&self, label: &str) -> Option<usize> {
        self.characters.iter().position(|c| c.label == label)
    }

    pub fn trivial_char(&self) -> usize {
        self.characters
            .iter()
            .position(|c| c.values.iter().all(|&v| v == 1))
            .expect("trivial character")
    }

    /// The sign character `w -> det(w)` on the reflection representation.
    pub fn sign_char(&self) -> usize {
        let signs = self.sign_values();
        self.characters
            .iter()
            .position(|c| c.values == signs)
            .expect("sign character")
    }

    /// `det` of each class representative on the reflection representation.
    pub fn sign_values(&self) -> Vec<i64> {
        self.classes
            .iter()
            .map(|c| determinant(&c.representative))
            .collect()
    }

    /// Character of the reflection representation.
    pub fn reflection_values(&self) -> Vec<i64> {
        self.classes
            .iter()
            .map(|c| super::linalg::trace(&c.representative))
            .collect()
    }

    /// Coefficients of `det(t I - M(w))`, constant term first, for every class.
    pub fn char_polys(&self) -> Vec<Vec<i64>> {
        self.classes
            .iter()
            .map(|c| char_poly(&c.representative))
            .collect()
    }

    /// Index of `chi (x) sign`.
    pub fn tensor_with_sign(&self, chi: usize) -> usize {
        let s = self.sign_values();
        let v: Vec<i64> = self.characters[chi]
            .values
            .iter()
            .zip(&s)
            .map(|(a, b)| a * b)
            .collect();
        self.characters
            .iter()
            .position(|c| c.values == v)
            .expect("sign twist of an irreducible character")
    }

    /// Number of irreducible factors.
    pub fn num_factors(&self) -> usize {
        self.descriptor.factors().len().max(1)
    }
}

impl Table {
    fn trivial() -> Table {
        Table {
            order: 1,
            rank: 0,
            classes: vec![ConjugacyClass {
                label: String::new(),
                keys: vec![],
                size: 1,
                centralizer: 1,
                representative: vec![],
            }],
            characters: vec![Character {
                label: String::new(),
                keys: vec![],
                values: vec![1],
            }],
        }
    }

    fn tensor(&self, o: &Table) -> Table {
        let join = |a: &str, b: &str| {
            if a.is_empty() {
                b.to_string()
            } else {
                format!("{a}{LABEL_SEP}{b}")
            }
        };
        let mut classes = Vec::new();
        for a in &self.classes {
            for b in &o.classes {
                let mut keys = a.keys.clone();
                keys.extend(b.keys.iter().cloned());
                classes.push(ConjugacyClass {
                    label: join(&a.label, &b.label),
                    keys,
                    size: a.size * b.size,
                    centralizer: a.centralizer * b.centralizer,
                    representative: block_diag(&a.representative, &b.representative),
                });
            }
        }
        let mut characters = Vec::new();
        for x in &self.characters {
            for y in &o.characters {
                let mut keys = x.keys.clone();
                keys.extend(y.keys.iter().cloned());
                let values = x
                    .values
                    .iter()
                    .flat_map(|&u| y.values.iter().map(move |&v| u * v))
                    .collect::<Vec<_>>();
                characters.push(Character {
                    label: join(&x.label, &y.label),
                    keys,
                    values,
                });
            }
        }
        Table {
            order: self.order * o.order,
            rank: self.rank + o.rank,
            classes,
            characters,
        }
    }
}

fn factor_table(f: &CoxeterFactor) -> Result<Table> {
    match f.family {
        Family::A => Ok(symmetric_table(f.rank + 1)),
        Family::B | Family::C => Ok(hyperoctahedral_table(f.rank)),
        Family::D => Ok(type_d_table(f.rank)),
        Family::I2(m) => dihedral_table(m),
    }
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Cycles of a cycle type laid out on consecutive points.
fn cycle_permutation(mu: &[usize]) -> Vec<usize> {
    let n: usize = mu.iter().sum();
    let mut perm = vec![0; n];
    let mut start = 0;
    for &len in mu {
        for i in 0..len {
            perm[start + i] = start + (i + 1) % len;
        }
        start += len;
    }
    perm
}

/// Matrix of a permutation on the root lattice of type `A_{n-1}` in the
/// basis `e_i - e_{i+1}`.
pub(crate) fn permutation_root_matrix(perm: &[usize]) -> IntMatrix {
    let n = perm.len();
    if n <= 1 {
        return vec![];
    }
    let mut m = vec![vec![0i64; n - 1]; n - 1];
    for j in 0..n - 1 {
        let (a, b) = (perm[j], perm[j + 1]);
        // e_a - e_b in the simple root basis
        if a < b {
            for row in m.iter_mut().take(b).skip(a) {
                row[j] += 1;
            }
        } else {
            for row in m.iter_mut().take(a).skip(b) {
                row[j] -= 1;
            }
        }
    }
    m
}

/// Murnaghan-Nakayama recursion; `cycles` sorted in decreasing order.
fn mn_value(
    lambda: &Partition,
    cycles: &[usize],
    memo: &mut HashMap<(Partition, usize), i64>,
) -> i64 {
    if cycles.is_empty() {
        return i64::from(lambda.is_empty());
    }
    let key = (lambda.clone(), cycles.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let v = remove_rim_hooks(lambda, cycles[0])
        .into_iter()
        .map(|(mu, s)| s * mn_value(&mu, &cycles[1..], memo))
        .sum();
    memo.insert(key, v);
    v
}

/// Character value of `S_n` at cycle type `mu`.
pub fn symmetric_character(lambda: &[usize], mu: &[usize]) -> i64 {
    let mut cycles = mu.to_vec();
    cycles.sort_unstable_by(|a, b| b.cmp(a));
    mn_value(&lambda.to_vec(), &cycles, &mut HashMap::new())
}

fn symmetric_table(n: usize) -> Table {
    let parts = partitions(n);
    let order = factorial(n);
    let classes = parts
        .iter()
        .map(|mu| {
            let z = z_symmetric(mu);
            ConjugacyClass {
                label: partition_label(mu),
                keys: vec![ClassKey::Cycle(mu.clone())],
                size: order / z,
                centralizer: z,
                representative: permutation_root_matrix(&cycle_permutation(mu)),
            }
        })
        .collect();
    let mut memos: Vec<HashMap<(Partition, usize), i64>> = vec![HashMap::new(); parts.len()];
    let characters = parts
        .iter()
        .rev()
        .map(|lambda| {
            let values = parts
                .iter()
                .zip(memos.iter_mut())
                .map(|(mu, memo)| mn_value(lambda, mu, memo))
                .collect();
            Character {
                label: partition_label(lambda),
                keys: vec![CharKey::Partition(lambda.clone())],
                values,
            }
        })
        .collect();
    Table {
        order,
        rank: n - 1,
        classes,
        characters,
    }
}

/// Bipartitions `(a, b)` of `n` with `|a|` decreasing, each side in
/// lexicographically increasing order.
fn bipartitions(n: usize) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        for a in partitions(k) {
            for b in partitions(n - k) {
                out.push((a.clone(), b));
            }
        }
    }
    out
}

/// Signed permutation matrix: positive cycles, then negative cycles, each on
/// consecutive coordinates.
fn signed_cycle_matrix(pos: &[usize], neg: &[usize]) -> IntMatrix {
    let n: usize = pos.iter().sum::<usize>() + neg.iter().sum::<usize>();
    let mut m = vec![vec![0i64; n]; n];
    let mut start = 0;
    for (cycles, negative) in [(pos, false), (neg, true)] {
        for &len in cycles {
            for i in 0..len {
                let src = start + i;
                let dst = start + (i + 1) % len;
                let sign = if negative && i + 1 == len { -1 } else { 1 };
                m[dst][src] = sign;
            }
            start += len;
        }
    }
    m
}

type BMemo = HashMap<(Partition, Partition, usize), i64>;

/// Character of the hyperoctahedral group indexed by `(left, right)` at the
/// element with the given signed cycles (`true` marks a negative cycle).
fn bn_value(
    left: &Partition,
    right: &Partition,
    cycles: &[(usize, bool)],
    memo: &mut BMemo,
) -> i64 {
    if cycles.is_empty() {
        return i64::from(left.is_empty() && right.is_empty());
    }
    let key = (left.clone(), right.clone(), cycles.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let (r, negative) = cycles[0];
    let mut v = 0;
    for (l2, s) in remove_rim_hooks(left, r) {
        v += s * bn_value(&l2, right, &cycles[1..], memo);
    }
    let eps = if negative { -1 } else { 1 };
    for (r2, s) in remove_rim_hooks(right, r) {
        v += eps * s * bn_value(left, &r2, &cycles[1..], memo);
    }
    memo.insert(key, v);
    v
}

fn signed_cycles(pos: &[usize], neg: &[usize]) -> Vec<(usize, bool)> {
    let mut c: Vec<(usize, bool)> = pos
        .iter()
        .map(|&k| (k, false))
        .chain(neg.iter().map(|&k| (k, true)))
        .collect();
    c.sort_unstable_by(|a, b| b.cmp(a));
    c
}

/// Character of the hyperoctahedral group `W(B_n)`.
pub fn hyperoctahedral_character(
    left: &[usize],
    right: &[usize],
    pos: &[usize],
    neg: &[usize],
) -> i64 {
    bn_value(
        &left.to_vec(),
        &right.to_vec(),
        &signed_cycles(pos, neg),
        &mut HashMap::new(),
    )
}

fn hyperoctahedral_table(n: usize) -> Table {
    let bips = bipartitions(n);
    let order = (1u64 << n) * factorial(n);
    let classes: Vec<ConjugacyClass> = bips
        .iter()
        .map(|(a, b)| {
            let z = z_hyperoctahedral(a, b);
            ConjugacyClass {
                label: bipartition_label(a, b),
                keys: vec![ClassKey::Signed {
                    pos: a.clone(),
                    neg: b.clone(),
                    split: None,
                }],
                size: order / z,
                centralizer: z,
                representative: signed_cycle_matrix(a, b),
            }
        })
        .collect();
    let cycle_lists: Vec<Vec<(usize, bool)>> =
        bips.iter().map(|(a, b)| signed_cycles(a, b)).collect();
    let mut memos: Vec<BMemo> = vec![HashMap::new(); bips.len()];
    let mut char_bips = Vec::new();
    for k in (0..=n).rev() {
        for a in partitions(k).into_iter().rev() {
            for b in partitions(n - k).into_iter().rev() {
                char_bips.push((a.clone(), b));
            }
        }
    }
    let characters = char_bips
        .iter()
        .map(|(l, r)| {
            let values = cycle_lists
                .iter()
                .zip(memos.iter_mut())
                .map(|(c, memo)| bn_value(l, r, c, memo))
                .collect();
            Character {
                label: bipartition_label(l, r),
                keys: vec![CharKey::Bipartition {
                    left: l.clone(),
                    right: r.clone(),
                    split: None,
                }],
                values,
            }
        })
        .collect();
    Table {
        order,
        rank: n,
        classes,
        characters,
    }
}

fn split_suffix(split: Option<bool>) -> &'static str {
    match split {
        Some(true) => "+",
        Some(false) => "-",
        None => "",
    }
}

/// Orders the two sides of a type D character label canonically.
fn d_canonical(a: &Partition, b: &Partition) -> (Partition, Partition) {
    let ka = (a.iter().sum::<usize>(), a.clone());
    let kb = (b.iter().sum::<usize>(), b.clone());
    if ka >= kb {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    }
}

fn type_d_table(n: usize) -> Table {
    let b = hyperoctahedral_table(n);
    let order = b.order / 2;
    // sign change of the first coordinate
    let mut t = identity(n);
    t[0][0] = -1;
    let mut classes = Vec::new();
    // (index of the type B class, split sign)
    let mut origin: Vec<(usize, Option<bool>)> = Vec::new();
    for (i, c) in b.classes.iter().enumerate() {
        let (pos, neg) = match &c.keys[0] {
            ClassKey::Signed { pos, neg, .. } => (pos.clone(), neg.clone()),
            _ => unreachable!(),
        };
        if neg.len() % 2 == 1 {
            continue;
        }
        if neg.is_empty() && pos.iter().all(|p| p % 2 == 0) {
            for s in [true, false] {
                let rep = if s {
                    c.representative.clone()
                } else {
                    mat_mul(&mat_mul(&t, &c.representative), &t)
                };
                classes.push(ConjugacyClass {
                    label: format!("{}{}", c.label, split_suffix(Some(s))),
                    keys: vec![ClassKey::Signed {
                        pos: pos.clone(),
                        neg: neg.clone(),
                        split: Some(s),
                    }],
                    size: c.size / 2,
                    centralizer: c.centralizer,
                    representative: rep,
                });
                origin.push((i, Some(s)));
            }
        } else {
            classes.push(ConjugacyClass {
                label: c.label.clone(),
                keys: c.keys.clone(),
                size: c.size,
                centralizer: c.centralizer / 2,
                representative: c.representative.clone(),
            });
            origin.push((i, None));
        }
    }
    let mut characters = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for ch in &b.characters {
        let (l, r) = match &ch.keys[0] {
            CharKey::Bipartition { left, right, .. } => (left.clone(), right.clone()),
            _ => unreachable!(),
        };
        let (l, r) = d_canonical(&l, &r);
        if !seen.insert((l.clone(), r.clone())) {
            continue;
        }
        let restricted: Vec<i64> = origin.iter().map(|&(i, _)| ch.values[i]).collect();
        if l != r {
            characters.push(Character {
                label: bipartition_label(&l, &r),
                keys: vec![CharKey::Bipartition {
                    left: l,
                    right: r,
                    split: None,
                }],
                values: restricted,
            });
            continue;
        }
        for e in [true, false] {
            let values = origin
                .iter()
                .zip(&restricted)
                .map(|(&(i, split), &v)| match split {
                    None => v / 2,
                    Some(s) => {
                        let pos = match &b.classes[i].keys[0] {
                            ClassKey::Signed { pos, .. } => pos,
                            _ => unreachable!(),
                        };
                        let half: Vec<usize> = pos.iter().map(|p| p / 2).collect();
                        let delta = (1i64 << (pos.len() - 1)) * symmetric_character(&l, &half);
                        v / 2 + if s == e { delta } else { -delta }
                    }
                })
                .collect();
            characters.push(Character {
                label: format!("{}{}", bipartition_label(&l, &r), split_suffix(Some(e))),
                keys: vec![CharKey::Bipartition {
                    left: l.clone(),
                    right: r.clone(),
                    split: Some(e),
                }],
                values,
            });
        }
    }
    Table {
        order,
        rank: n,
        classes,
        characters,
    }
}

/// `2 cos(2 pi j / m)` for the crystallographic `m`.
fn two_cos(j: i64, m: i64) -> i64 {
    let r = (j.rem_euclid(m) * 12 / m) as usize;
    debug_assert_eq!(j.rem_euclid(m) * 12 % m, 0);
    [2, 0, 1, 0, -1, 0, -2, 0, -1, 0, 1, 0][r]
}

fn dihedral_table(m: u32) -> Result<Table> {
    let cartan: [[i64; 2]; 2] = match m {
        2 => [[2, 0], [0, 2]],
        3 => [[2, -1], [-1, 2]],
        4 => [[2, -2], [-1, 2]],
        6 => [[2, -3], [-1, 2]],
        _ => return Err(Error::UnsupportedRank(format!("I2({m})"))),
    };
    // s_i(alpha_j) = alpha_j - a_ij alpha_i; columns are images
    let refl = |i: usize| -> IntMatrix {
        let mut s = identity(2);
        for j in 0..2 {
            s[i][j] -= cartan[i][j];
        }
        s
    };
    let (s1, s2) = (refl(0), refl(1));
    let r = mat_mul(&s1, &s2);
    let mut rot = vec![identity(2)];
    for _ in 1..m {
        rot.push(mat_mul(rot.last().unwrap(), &r));
    }
    let mi = m as i64;
    let order = 2 * m as u64;
    let mut classes = Vec::new();
    let half = m / 2;
    for k in 0..=half {
        let size = if k == 0 || (m.is_multiple_of(2) && k == half) {
            1
        } else {
            2
        };
        classes.push(ConjugacyClass {
            label: if k == 0 { "1".into() } else { format!("r{k}") },
            keys: vec![ClassKey::Rotation(k)],
            size,
            centralizer: order / size,
            representative: rot[k as usize].clone(),
        });
    }
    let refl_classes: Vec<(u8, IntMatrix)> = if m.is_multiple_of(2) {
        vec![(0, s1), (1, s2)]
    } else {
        vec![(0, s1)]
    };
    let rsize = if m.is_multiple_of(2) {
        m as u64 / 2
    } else {
        m as u64
    };
    for (idx, rep) in refl_classes {
        classes.push(ConjugacyClass {
            label: if idx == 0 { "s".into() } else { "t".into() },
            keys: vec![ClassKey::Reflection(idx)],
            size: rsize,
            centralizer: order / rsize,
            representative: rep,
        });
    }
    let value = |rotation: &dyn Fn(i64) -> i64, s: i64, t: i64| -> Vec<i64> {
        classes
            .iter()
            .map(|c| match c.keys[0] {
                ClassKey::Rotation(k) => rotation(k as i64),
                ClassKey::Reflection(0) => s,
                _ => t,
            })
            .collect()
    };
    let mut chars = vec![
        ("1".to_string(), value(&|_| 1, 1, 1)),
        ("sgn".to_string(), value(&|_| 1, -1, -1)),
    ];
    if m.is_multiple_of(2) {
        chars.push((
            "eps1".into(),
            value(&|k| if k % 2 == 0 { 1 } else { -1 }, 1, -1),
        ));
        chars.push((
            "eps2".into(),
            value(&|k| if k % 2 == 0 { 1 } else { -1 }, -1, 1),
        ));
    }
    for j in 1..=((mi - 1) / 2) {
        chars.push((format!("rho{j}"), value(&|k| two_cos(j * k, mi), 0, 0)));
    }
    let characters = chars
        .into_iter()
        .map(|(label, values)| Character {
            keys: vec![CharKey::Dihedral(label.clone())],
            label,
            values,
        })
        .collect();
    Ok(Table {
        order,
        rank: 2,
        classes,
        characters,
    })
}

/// Label of a class key inside its factor.
pub fn class_key_label(k: &ClassKey) -> String {
    match k {
        ClassKey::Cycle(p) => partition_label(p),
        ClassKey::Signed { pos, neg, split } => {
            format!("{}{}", bipartition_label(pos, neg), split_suffix(*split))
        }
        ClassKey::Rotation(0) => "1".into(),
        ClassKey::Rotation(k) => format!("r{k}"),
        ClassKey::Reflection(0) => "s".into(),
        ClassKey::Reflection(_) => "t".into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_classes() {
        let w = WeylGroup::symmetric(3).unwrap();
        assert_eq!(w.order(), 6);
        assert_eq!(w.class_sizes(), vec![1, 3, 2]);
        let rows: Vec<Vec<i64>> = w.characters().iter().map(|c| c.values.clone()).collect();
        assert!(rows.contains(&vec![1, 1, 1]));
        assert!(rows.contains(&vec![1, -1, 1]));
        assert!(rows.contains(&vec![2, 0, -1]));
        assert_eq!(w.reflection_values(), vec![2, 0, -1]);
        assert_eq!(w.characters()[w.sign_char()].label, "1+1+1");
    }

    #[test]
    fn b2_classes() {
        let w = WeylGroup::build(&"B2".parse().unwrap()).unwrap();
        assert_eq!(w.order(), 8);
        assert_eq!(w.num_classes(), 5);
        assert_eq!(w.class_sizes().iter().sum::<u64>(), 8);
    }

    #[test]
    fn dihedral_two_cos() {
        assert_eq!(two_cos(1, 6), 1);
        assert_eq!(two_cos(2, 6), -1);
        assert_eq!(two_cos(1, 4), 0);
        assert_eq!(two_cos(1, 3), -1);
    }
}
