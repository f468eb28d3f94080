use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::field::{check_prime, det_slice, null_space, FpMatrix};
use crate::combinat::partitions;
use crate::error::{Error, Result};
use crate::exactalg::{ratio, ExactScalar};
use crate::ggg::LinearKind;

/// Largest number of matrices any single enumeration may visit.
pub const MAX_ENUMERATION: u64 = 50_000_000;

/// `GL_n(F_p)` or `SL_n(F_p)` for `n <= 3` and `p` prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteMatrixGroup {
    pub kind: LinearKind,
    pub n: usize,
    pub q: u32,
}

impl FiniteMatrixGroup {
    pub fn new(kind: LinearKind, n: usize, q: u32) -> Result<Self> {
        check_prime(q)?;
        if !(1..=3).contains(&n) {
            return Err(Error::SizeBound(format!("n = {n}")));
        }
        if (q as u64).pow((n * n) as u32) > MAX_ENUMERATION {
            return Err(Error::SizeBound(format!("{q}^{}", n * n)));
        }
        Ok(FiniteMatrixGroup { kind, n, q })
    }

    fn admits(&self, det: u32) -> bool {
        match self.kind {
            LinearKind::Gl => det != 0,
            LinearKind::Sl => det == 1,
        }
    }

    /// Group order by counting all matrices.
    pub fn order(&self) -> u64 {
        let units: Vec<FpMatrix> = (0..self.n * self.n)
            .map(|k| FpMatrix::unit(self.n, self.q, k / self.n, k % self.n))
            .collect();
        count_in_span(&units, self.n, self.q, |d| self.admits(d))
    }

    /// `|C_{G^F}(u)|` by counting the group elements of the commutant of `u`.
    pub fn centralizer_order(&self, u: &FpMatrix) -> u64 {
        count_in_span(&centralizer_basis(u), self.n, self.q, |d| self.admits(d))
    }
}

/// Counts the matrices of the `F_p`-span of `basis` whose determinant
/// passes `keep`. Each step of the odometer adds one basis matrix.
fn count_in_span(basis: &[FpMatrix], n: usize, p: u32, keep: impl Fn(u32) -> bool) -> u64 {
    let k = basis.len();
    let mut digits = vec![0u32; k];
    let mut cur = vec![0u32; n * n];
    let mut count = 0u64;
    loop {
        if keep(det_slice(&cur, n, p)) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == k {
                return count;
            }
            for (c, b) in cur.iter_mut().zip(&basis[i].e) {
                *c = (*c + b) % p;
            }
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// All elements of the span, in odometer order.
fn span(basis: &[FpMatrix], n: usize, p: u32) -> Vec<(Vec<u32>, FpMatrix)> {
    let k = basis.len();
    let mut digits = vec![0u32; k];
    let mut cur = FpMatrix::zero(n, p);
    let mut out = Vec::new();
    loop {
        out.push((digits.clone(), cur.clone()));
        let mut i = 0;
        loop {
            if i == k {
                return out;
            }
            cur = cur.add(&basis[i]);
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// Basis of `{X : X u = u X}`.
pub fn centralizer_basis(u: &FpMatrix) -> Vec<FpMatrix> {
    let (n, p) = (u.n, u.p);
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut row = vec![0u32; n * n];
            for a in 0..n {
                for b in 0..n {
                    let mut v = 0i64;
                    if a == i {
                        v += u.get(b, j) as i64;
                    }
                    if b == j {
                        v -= u.get(i, a) as i64;
                    }
                    row[a * n + b] = v.rem_euclid(p as i64) as u32;
                }
            }
            rows.push(row);
        }
    }
    null_space(rows, n * n, p)
        .into_iter()
        .map(|e| FpMatrix { n, p, e })
        .collect()
}

/// Upper unitriangular Jordan form of type `lambda`.
pub fn jordan_matrix(lambda: &[usize], p: u32) -> FpMatrix {
    let n = lambda.iter().sum();
    let mut m = FpMatrix::identity(n, p);
    let mut start = 0;
    for &l in lambda {
        for i in start..start + l - 1 {
            m.e[i * n + i + 1] = 1;
        }
        start += l;
    }
    m
}

/// Unipotent elements of one Jordan type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnipotentClassInfo {
    pub jordan_type: Vec<usize>,
    /// `|C_{G^F}(u)|`, the same for every `G^F`-class of this type.
    pub centralizer: u64,
    /// Number of `G^F`-classes of this type.
    pub classes: u64,
}

pub fn enumerate_unipotent(g: &FiniteMatrixGroup) -> Vec<UnipotentClassInfo> {
    let gl = FiniteMatrixGroup {
        kind: LinearKind::Gl,
        ..*g
    };
    partitions(g.n)
        .into_iter()
        .map(|lambda| {
            let u = jordan_matrix(&lambda, g.q);
            let c = g.centralizer_order(&u);
            let classes = match g.kind {
                LinearKind::Gl => 1,
                // the GL-class splits into |GL : SL C_GL(u)| classes
                LinearKind::Sl => (g.q as u64 - 1) * c / gl.centralizer_order(&u),
            };
            UnipotentClassInfo {
                jordan_type: lambda,
                centralizer: c,
                classes,
            }
        })
        .collect()
}

/// Number of unipotent matrices of each Jordan type, by running through all
/// matrices.
pub fn count_unipotent_by_type(n: usize, p: u32) -> Result<BTreeMap<Vec<usize>, u64>> {
    FiniteMatrixGroup::new(LinearKind::Gl, n, p)?;
    let units: Vec<FpMatrix> = (0..n * n)
        .map(|k| FpMatrix::unit(n, p, k / n, k % n))
        .collect();
    let mut out = BTreeMap::new();
    for (_, m) in span(&units, n, p) {
        if let Some(t) = m.jordan_type() {
            *out.entry(t).or_insert(0) += 1;
        }
    }
    Ok(out)
}

/// Character values keyed by the Jordan type of the unipotent class.
pub type UnipotentValues = Vec<(Vec<usize>, ExactScalar)>;

/// Values of the generalized Gelfand-Graev character of `GL_n(F_p)`
/// attached to the unipotent class of type `lambda`, on every unipotent
/// class. It is `p^{-dim g(1)/2} Ind_{U_{>=2}}^G η` with `U_{>=2}` the
/// unipotent group of the Dynkin grading in degrees `>= 2` and
/// `η(1 + X) = χ0(tr(u* X))`, `u*` the nilpotent of type `lambda` in degree
/// `-2` and `χ0(x) = exp(2πi psi x / p)`.
pub fn induced_ggg(g: &FiniteMatrixGroup, lambda: &[usize], psi: u32) -> Result<UnipotentValues> {
    if g.kind != LinearKind::Gl {
        return Err(Error::UnsupportedGroup(
            "induced Gelfand-Graev characters are built for GL_n only".into(),
        ));
    }
    let (n, p) = (g.n, g.q);
    if lambda.iter().sum::<usize>() != n || psi.is_multiple_of(p) {
        return Err(Error::Malformed(format!("type {lambda:?}, psi = {psi}")));
    }
    // sl2 weights along each Jordan chain
    let mut weight = Vec::new();
    let mut ustar = FpMatrix::zero(n, p);
    for &l in lambda {
        let start = weight.len();
        for j in 0..l {
            weight.push(l as i64 - 1 - 2 * j as i64);
            if j + 1 < l {
                ustar.e[(start + j + 1) * n + start + j] = 1;
            }
        }
    }
    let mut basis = Vec::new();
    let mut deg_one = 0;
    for a in 0..n {
        for b in 0..n {
            match weight[a] - weight[b] {
                1 => deg_one += 1,
                d if d >= 2 => basis.push(FpMatrix::unit(n, p, a, b)),
                _ => {}
            }
        }
    }
    if deg_one % 2 != 0 {
        return Err(Error::invariant(
            "induced_ggg",
            "degree-one part has odd dimension",
        ));
    }
    let mut tally: BTreeMap<Vec<usize>, Vec<u64>> = BTreeMap::new();
    let one = FpMatrix::identity(n, p);
    for (_, x) in span(&basis, n, p) {
        let r = ustar.mul(&x).trace();
        let t = one.add(&x).jordan_type().expect("unipotent");
        tally.entry(t).or_insert_with(|| vec![0; p as usize])[r as usize] += 1;
    }
    let h_order = (p as u64).pow(basis.len() as u32);
    let norm = (p as u64).pow(deg_one / 2) * h_order;
    partitions(n)
        .into_iter()
        .map(|mu| {
            let sum = tally.get(&mu).map_or(ExactScalar::int(0), |counts| {
                counts
                    .iter()
                    .enumerate()
                    .fold(ExactScalar::int(0), |acc, (r, &c)| {
                        acc + &(ExactScalar::zeta(p, (psi as i64) * r as i64)
                            * &ExactScalar::int(c as i64))
                    })
            });
            let c = g.centralizer_order(&jordan_matrix(&mu, p));
            let scale = ExactScalar::rational(ratio(c as i64, norm as i64));
            Ok((mu, sum * &scale))
        })
        .collect()
}
