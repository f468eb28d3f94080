//! Lusztig's algorithm for one block: the matrices Ω and Ξ computed from the
//! character table of `W_G(L)`, their factorization `Ξ = P̃ᵀ Λ P̃`, and the
//! objects derived from `P̃`: the class functions `Q̃_ι`, generalized Green
//! functions, the transport map `Q^G`, duality and scalar products.
//!
//! Ω, Ξ and Λ are stored in normalized form, with the factor
//! `|Z_G^{0F}| = (q-1)^{central_rank}` removed. The `*_tilde` accessors
//! reinstate it.

mod green;

use std::ops::Range;

use num_traits::{One, ToPrimitive, Zero};

use crate::blocks::BlockDescriptor;
use crate::error::{Error, Result};
use crate::exactalg::matrix::{self, Matrix};
use crate::exactalg::{rat, LaurentPoly, Rational, RationalFunction};
use crate::weyl::{exterior_reflection_characters, ClassFunction, WeylGroup};

pub use green::{
    duality, green_norm_formula, qg_transport, scalar_product_green, scalar_product_x,
    GreenFunction, UnipotentValues,
};

/// Output of the factorization for one block.
#[derive(Debug, Clone)]
pub struct GreenTable {
    block: BlockDescriptor,
    omega: Matrix<LaurentPoly>,
    xi: Matrix<RationalFunction>,
    ptilde: Matrix<LaurentPoly>,
    lambda: Matrix<RationalFunction>,
    qtilde: Vec<ClassFunction<LaurentPoly>>,
}

type IntPoly = Vec<i128>;

fn int_poly_add_scaled(acc: &mut IntPoly, p: &[i128], s: i128) {
    if acc.len() < p.len() {
        acc.resize(p.len(), 0);
    }
    for (a, &x) in acc.iter_mut().zip(p) {
        *a = x
            .checked_mul(s)
            .and_then(|y| a.checked_add(y))
            .expect("coefficient overflow in class sum");
    }
}

fn int_poly_mul(a: &[i128], b: &[i128]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn int_poly_to_laurent(p: &[i128]) -> LaurentPoly {
    LaurentPoly::from_terms(
        p.iter()
            .enumerate()
            .map(|(e, &c)| (e as i64, Rational::from_integer(c.into()))),
    )
}

fn laurent_to_int_poly(p: &LaurentPoly) -> IntPoly {
    let deg = p.degree().unwrap_or(-1);
    let mut out = vec![0i128; (deg + 1).max(0) as usize];
    for (e, c) in p.terms() {
        assert!(*e >= 0 && c.is_integer(), "expected an integer polynomial");
        out[*e as usize] = c.to_integer().to_i128().expect("coefficient fits");
    }
    out
}

/// Character values of the pairs' characters, indexed by pair then class.
fn pair_characters(b: &BlockDescriptor) -> Vec<Vec<i64>> {
    let w = b.group();
    b.pairs()
        .iter()
        .map(|p| w.characters()[p.phi].values.clone())
        .collect()
}

/// Sum over classes `sum_w |w^W| f(w) g(w) h(w)` with integer-polynomial `h`.
fn class_sum(w: &WeylGroup, f: &[i64], g: &[i64], h: &[IntPoly]) -> IntPoly {
    let mut acc = Vec::new();
    for (c, cls) in w.classes().iter().enumerate() {
        let s = cls.size as i128 * f[c] as i128 * g[c] as i128;
        if s != 0 {
            int_poly_add_scaled(&mut acc, &h[c], s);
        }
    }
    acc
}

fn exact_div(p: IntPoly, d: i128) -> IntPoly {
    p.into_iter()
        .map(|x| {
            assert_eq!(x % d, 0, "class sum not divisible by the group order");
            x / d
        })
        .collect()
}

/// Normalized Ω: entry `(ι, κ)` is `⟨Z̄ φ_ι, φ_κ⟩` with
/// `Z̄(w) = det(q - w)` on the reflection module. Computed both from the
/// characteristic polynomials and from the exterior powers of the reflection
/// character, and the two are checked to agree.
pub fn omega_matrix(b: &BlockDescriptor) -> Matrix<LaurentPoly> {
    let w = b.group();
    let chars = pair_characters(b);
    let order = w.order() as i128;
    let l = w.rank();
    let zbar: Vec<IntPoly> = w
        .char_polys()
        .iter()
        .map(|p| p.iter().map(|&x| x as i128).collect())
        .collect();
    let ext: Vec<Vec<i64>> = exterior_reflection_characters(w)
        .iter()
        .map(|f| {
            f.values()
                .iter()
                .map(|v| v.to_integer().to_i64().expect("integer character"))
                .collect()
        })
        .collect();
    let ones = vec![vec![1i128]; w.num_classes()];
    let n = b.num_pairs();
    let mut out = matrix::zeros(n, n);
    for i in 0..n {
        for k in i..n {
            let direct =
                int_poly_to_laurent(&exact_div(class_sum(w, &chars[i], &chars[k], &zbar), order));
            let mut via_ext = LaurentPoly::zero();
            for (e, lam) in ext.iter().enumerate() {
                let prod: Vec<i64> = chars[i].iter().zip(lam).map(|(a, b)| a * b).collect();
                let m = exact_div(class_sum(w, &prod, &chars[k], &ones), order);
                let m = m.first().copied().unwrap_or(0);
                let sign = if e % 2 == 0 { 1 } else { -1 };
                via_ext += &LaurentPoly::monomial(rat((sign * m) as i64), (l - e) as i64);
            }
            assert_eq!(direct, via_ext, "Omega routes disagree at ({i}, {k})");
            out[i][k] = direct.clone();
            out[k][i] = direct;
        }
    }
    out
}

/// Least common multiple of the monic polynomials `Z̄(w)`.
fn zbar_lcm(w: &WeylGroup) -> LaurentPoly {
    let mut d = LaurentPoly::one();
    let mut seen: Vec<Vec<i64>> = Vec::new();
    for p in w.char_polys() {
        if seen.contains(&p) {
            continue;
        }
        let z = int_poly_to_laurent(&p.iter().map(|&x| x as i128).collect::<Vec<_>>());
        let r = RationalFunction::new(d.clone(), z).expect("nonzero");
        d = &d * r.denom();
        seen.push(p);
    }
    d
}

/// Normalized Ξ: entry `(ι, κ)` is `⟨Z̄^{-1} φ_ι, φ_κ⟩`. The product `Ω Ξ`
/// is checked to be the identity.
pub fn xi_matrix(b: &BlockDescriptor) -> Matrix<RationalFunction> {
    let w = b.group();
    let chars = pair_characters(b);
    let order = w.order() as i128;
    let d = zbar_lcm(w);
    let cof: Vec<IntPoly> = w
        .char_polys()
        .iter()
        .map(|p| {
            let z = int_poly_to_laurent(&p.iter().map(|&x| x as i128).collect::<Vec<_>>());
            laurent_to_int_poly(&d.div_exact(&z).expect("Z(w) divides the lcm"))
        })
        .collect();
    let n = b.num_pairs();
    let mut num: Matrix<IntPoly> = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for k in i..n {
            let s = class_sum(w, &chars[i], &chars[k], &cof);
            num[i][k] = s.clone();
            num[k][i] = s;
        }
    }
    // Ω N = |W| D I
    let omega = omega_matrix(b);
    let om: Matrix<IntPoly> = omega
        .iter()
        .map(|r| r.iter().map(laurent_to_int_poly).collect())
        .collect();
    let target = laurent_to_int_poly(&d.scale(&rat(order as i64)));
    for i in 0..n {
        for k in 0..n {
            let mut acc: IntPoly = Vec::new();
            for j in 0..n {
                int_poly_add_scaled(&mut acc, &int_poly_mul(&om[i][j], &num[j][k]), 1);
            }
            while acc.last() == Some(&0) {
                acc.pop();
            }
            if i == k {
                assert_eq!(
                    acc, target,
                    "Omega * Xi differs from the identity at ({i}, {i})"
                );
            } else {
                assert!(
                    acc.is_empty(),
                    "Omega * Xi differs from the identity at ({i}, {k})"
                );
            }
        }
    }
    let den = d.scale(&rat(order as i64));
    num.iter()
        .map(|r| {
            r.iter()
                .map(|p| {
                    RationalFunction::new(int_poly_to_laurent(p), den.clone()).expect("nonzero")
                })
                .collect()
        })
        .collect()
}

fn is_zero_matrix(m: &Matrix<RationalFunction>) -> bool {
    m.iter().all(|r| r.iter().all(Zero::is_zero))
}

/// Solves `Ξ = P̃ᵀ Λ P̃` by symmetric block elimination along the equal-support
/// groups in total order, then assembles `Q̃_ι(w) = sum_γ φ_γ(w) P̃[ι][γ]`.
pub fn factorize(b: &BlockDescriptor) -> Result<GreenTable> {
    let omega = omega_matrix(b);
    let xi = xi_matrix(b);
    let groups = b.support_groups();
    let r = groups.len();
    let blk = |m: &Matrix<RationalFunction>, i: usize, j: usize| {
        matrix::block(m, groups[i].clone(), groups[j].clone())
    };
    // p[i][j]: block (i, j) of P̃, i < j; diag[i]: block i of Λ.
    let mut p: Vec<Vec<Option<Matrix<RationalFunction>>>> = vec![vec![None; r]; r];
    let mut diag: Vec<Matrix<RationalFunction>> = Vec::with_capacity(r);
    // dp[i][j] = Λ_i P̃_ij, cached
    let mut dp: Vec<Vec<Option<Matrix<RationalFunction>>>> = vec![vec![None; r]; r];
    for k in 0..r {
        // Σ_{i<k} P̃_ikᵀ Λ_i P̃_ij for j >= k
        let correction =
            |j: usize,
             p: &Vec<Vec<Option<Matrix<RationalFunction>>>>,
             dp: &Vec<Vec<Option<Matrix<RationalFunction>>>>| {
                let mut acc = blk(&xi, k, j);
                for i in 0..k {
                    if let (Some(pik), Some(dpij)) = (&p[i][k], &dp[i][j]) {
                        acc = matrix::sub(&acc, &matrix::mul(&matrix::transpose(pik), dpij));
                    }
                }
                acc
            };
        let dk = correction(k, &p, &dp);
        let dk_inv = matrix::inverse(&dk).ok_or_else(|| {
            Error::SingularBlock(b.supports()[b.support_index(groups[k].start)].clone())
        })?;
        for j in k + 1..r {
            let rhs = correction(j, &p, &dp);
            if is_zero_matrix(&rhs) {
                continue;
            }
            let pkj = matrix::mul(&dk_inv, &rhs);
            dp[k][j] = Some(rhs);
            p[k][j] = Some(pkj);
        }
        diag.push(dk);
    }
    let n = b.num_pairs();
    let mut ptilde: Matrix<LaurentPoly> = matrix::identity(n);
    let mut lambda: Matrix<RationalFunction> = matrix::zeros(n, n);
    for (k, g) in groups.iter().enumerate() {
        for (a, row) in g.clone().enumerate() {
            for (c, col) in g.clone().enumerate() {
                lambda[row][col] = diag[k][a][c].clone();
            }
        }
        for j in k + 1..r {
            let Some(pkj) = &p[k][j] else { continue };
            for (a, row) in g.clone().enumerate() {
                for (c, col) in groups[j].clone().enumerate() {
                    let e = &pkj[a][c];
                    ptilde[row][col] = e.as_laurent().ok_or_else(|| {
                        Error::NonPolynomial(format!(
                            "P[{}][{}] = {e}",
                            b.pair(row).id,
                            b.pair(col).id
                        ))
                    })?;
                }
            }
        }
    }
    let w = b.group();
    let chars = pair_characters(b);
    let qtilde = (0..n)
        .map(|i| {
            ClassFunction::from_fn(w.clone(), |c| {
                (0..n).fold(LaurentPoly::zero(), |acc, g| {
                    if ptilde[i][g].is_zero() {
                        acc
                    } else {
                        acc + &ptilde[i][g].scale(&rat(chars[g][c]))
                    }
                })
            })
        })
        .collect();
    Ok(GreenTable {
        block: b.clone(),
        omega,
        xi,
        ptilde,
        lambda,
        qtilde,
    })
}

fn center_factor(b: &BlockDescriptor) -> LaurentPoly {
    LaurentPoly::from_terms([(0, rat(-1)), (1, rat(1))]).pow(b.dims().central_rank as u32)
}

impl GreenTable {
    pub fn block(&self) -> &BlockDescriptor {
        &self.block
    }

    pub fn num_pairs(&self) -> usize {
        self.block.num_pairs()
    }

    /// Normalized Ω.
    pub fn omega(&self) -> &Matrix<LaurentPoly> {
        &self.omega
    }

    /// Normalized Ξ = Ω⁻¹.
    pub fn xi(&self) -> &Matrix<RationalFunction> {
        &self.xi
    }

    pub fn ptilde(&self) -> &Matrix<LaurentPoly> {
        &self.ptilde
    }

    /// Normalized Λ.
    pub fn lambda(&self) -> &Matrix<RationalFunction> {
        &self.lambda
    }

    pub fn qtilde(&self) -> &[ClassFunction<LaurentPoly>] {
        &self.qtilde
    }

    /// `Ω̃ = |Z_G^{0F}| Ω`.
    pub fn omega_tilde(&self) -> Matrix<LaurentPoly> {
        let z = center_factor(&self.block);
        matrix::map(&self.omega, |x| x * &z)
    }

    /// `Ξ̃ = |Z_G^{0F}|⁻¹ Ξ`, the Gram matrix of the `X̃_ι`.
    pub fn xi_tilde(&self) -> Matrix<RationalFunction> {
        let z = RationalFunction::from_poly(center_factor(&self.block));
        matrix::map(&self.xi, |x| x / &z)
    }

    /// `Λ̃ = |Z_G^{0F}|⁻¹ Λ`, the Gram matrix of the `Ỹ_ι`.
    pub fn lambda_tilde(&self) -> Matrix<RationalFunction> {
        let z = RationalFunction::from_poly(center_factor(&self.block));
        matrix::map(&self.lambda, |x| x / &z)
    }

    /// Un-normalized `P[κ][ι] = q^{c_κ - c_ι} P̃[κ][ι]`. Fails when some
    /// nonzero entry needs a half-integral power of `q`.
    pub fn p_matrix(&self) -> Result<Matrix<LaurentPoly>> {
        let n = self.num_pairs();
        let mut out = matrix::zeros(n, n);
        for k in 0..n {
            for i in 0..n {
                let e = &self.ptilde[k][i];
                if e.is_zero() {
                    continue;
                }
                let t = self.block.pair(k).twice_c - self.block.pair(i).twice_c;
                if t % 2 != 0 {
                    return Err(Error::NonPolynomial(format!(
                        "half-integral shift at ({k}, {i})"
                    )));
                }
                out[k][i] = e.shift(t / 2);
            }
        }
        Ok(out)
    }

    /// Ranges of pair indices with equal support.
    pub fn support_groups(&self) -> Vec<Range<usize>> {
        self.block.support_groups()
    }

    /// `⟨Z̄ Q̃_ι, Q̃_γ⟩` for all pairs; equals `Λ⁻¹` (normalized).
    pub fn qtilde_gram(&self) -> Matrix<LaurentPoly> {
        let w = self.block.group();
        let zbar = crate::weyl::reflection_determinant(w);
        let n = self.num_pairs();
        let zq: Vec<_> = self
            .qtilde
            .iter()
            .map(|f| f.mul(&zbar).expect("same group"))
            .collect();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|g| zq[i].inner_product(&self.qtilde[g]).expect("same group"))
                    .collect()
            })
            .collect()
    }

    /// Checks unitriangularity, the closure vanishing pattern, the shape of
    /// Λ, and `P̃ᵀ Λ P̃ = Ξ`.
    pub fn verify(&self) -> Result<()> {
        let n = self.num_pairs();
        let b = &self.block;
        for k in 0..n {
            for i in 0..n {
                let e = &self.ptilde[k][i];
                let id = |x: usize| b.pair(x).id.clone();
                if b.same_support(k, i) {
                    if (k == i) != e.is_one() || (k != i && !e.is_zero()) {
                        return Err(Error::invariant(
                            format!("ptilde[{}][{}]", id(k), id(i)),
                            "diagonal block is not the identity",
                        ));
                    }
                } else if !e.is_zero() && (k > i || !b.in_closure(k, i)) {
                    return Err(Error::invariant(
                        format!("ptilde[{}][{}]", id(k), id(i)),
                        "nonzero outside the closure pattern",
                    ));
                }
                let l = &self.lambda[k][i];
                if *l != self.lambda[i][k] {
                    return Err(Error::invariant(
                        format!("lambda[{}][{}]", id(k), id(i)),
                        "not symmetric",
                    ));
                }
                if !l.is_zero() && !b.same_support(k, i) {
                    return Err(Error::invariant(
                        format!("lambda[{}][{}]", id(k), id(i)),
                        "not block diagonal",
                    ));
                }
            }
        }
        let p = matrix::map(&self.ptilde, |x| RationalFunction::from_poly(x.clone()));
        let recon = matrix::mul(&matrix::mul(&matrix::transpose(&p), &self.lambda), &p);
        if recon != self.xi {
            return Err(Error::invariant(
                "ptilde",
                "transpose(P) Lambda P differs from Xi",
            ));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::gl_principal_block;
    use crate::exactalg::lp;

    fn rf(num: &[(i64, i64)], den: &[(i64, i64)]) -> RationalFunction {
        RationalFunction::new(lp(num), lp(den)).unwrap()
    }

    #[test]
    fn gl2_by_hand() {
        let t = factorize(&gl_principal_block(2).unwrap()).unwrap();
        assert_eq!(
            t.omega(),
            &vec![
                vec![lp(&[(1, 1)]), lp(&[(0, -1)])],
                vec![lp(&[(0, -1)]), lp(&[(1, 1)])]
            ]
        );
        let d = [(0, -1), (2, 1)];
        assert_eq!(
            t.xi(),
            &vec![
                vec![rf(&[(1, 1)], &d), rf(&[(0, 1)], &d)],
                vec![rf(&[(0, 1)], &d), rf(&[(1, 1)], &d)]
            ]
        );
        assert_eq!(
            t.ptilde(),
            &vec![
                vec![lp(&[(0, 1)]), lp(&[(-1, 1)])],
                vec![lp(&[]), lp(&[(0, 1)])]
            ]
        );
        assert_eq!(t.lambda()[0][0], rf(&[(1, 1)], &d));
        assert_eq!(t.lambda()[1][1], rf(&[(-1, 1)], &[(0, 1)]));
        assert_eq!(t.p_matrix().unwrap()[0][1], lp(&[(0, 1)]));
        t.verify().unwrap();
    }

    #[test]
    fn trivial_block() {
        let t = factorize(&gl_principal_block(1).unwrap()).unwrap();
        assert_eq!(t.xi(), &vec![vec![RationalFunction::one()]]);
        assert_eq!(t.ptilde(), &vec![vec![LaurentPoly::one()]]);
    }
}
