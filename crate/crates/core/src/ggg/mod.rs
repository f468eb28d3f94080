//! Generalized Gelfand-Graev characters through their expansions on the
//! `X̃` and `Ỹ` bases, their orthogonality relations, and the group orders
//! and signs these need.

mod order;

use num_traits::{One, Zero};

use crate::blocks::BlockDescriptor;
use crate::combinat::parse_partition;
use crate::error::{Error, Result};
use crate::exactalg::matrix::{self, inverse};
use crate::exactalg::{rat, ExactScalar, LaurentPoly, Rational, RationalFunction, Ring};
use crate::lusztig::{duality, qg_transport, scalar_product_x, GreenTable};
use crate::weyl::{torus_order_function, ClassFunction};

pub use order::{
    centralizer_eps, centralizer_order, check_order_star, check_z_star, order_polynomial,
    GroupSpec, LinearKind,
};

type ExactPoly = LaurentPoly<ExactScalar>;

fn parity(n: usize) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Signs attached to a split block, and the fourth root of unity `ζ_I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignData {
    pub eps_g: i64,
    pub eps_l: i64,
    pub eps_zl: i64,
    pub eta_g: i64,
    pub eta_l: i64,
    /// `(-1)^{semisimple rank of L}`.
    pub sigma_l: i64,
    /// `ζ_I = i^zeta_exp`; 0 unless configured.
    pub zeta_exp: u8,
}

impl SignData {
    pub fn of_block(b: &BlockDescriptor) -> Self {
        let d = b.dims();
        let eps_g = parity(d.rank);
        let eps_zl = parity(d.dim_zl);
        SignData {
            eps_g,
            // L is G-split, so it has the same F_q-rank as G
            eps_l: eps_g,
            eps_zl,
            eta_g: eps_g * parity(d.central_rank),
            eta_l: eps_g * eps_zl,
            sigma_l: parity(d.rank - d.dim_zl),
            zeta_exp: 0,
        }
    }

    pub fn with_zeta(self, zeta_exp: u8) -> Self {
        SignData {
            zeta_exp: zeta_exp % 4,
            ..self
        }
    }

    pub fn zeta(&self) -> ExactScalar {
        ExactScalar::zeta(4, self.zeta_exp as i64)
    }

    /// `ζ̃_I = η_L σ_L ζ_I`.
    pub fn zeta_tilde(&self) -> ExactScalar {
        self.zeta() * &ExactScalar::int(self.eta_l * self.sigma_l)
    }
}

/// `Γ̃_ι = Q^G(sgn · Z · Q̃*_ι)` on both bases.
#[derive(Debug, Clone, PartialEq)]
pub struct GGGExpansion {
    pub pair: usize,
    /// Coefficients on the `X̃_κ`.
    pub x: Vec<LaurentPoly>,
    /// Coefficients on the `Ỹ_κ`; `y = P̃ x`.
    pub y: Vec<LaurentPoly>,
}

fn sgn_z(t: &GreenTable) -> Result<ClassFunction<LaurentPoly>> {
    let w = t.block().group();
    Ok(torus_order_function(w, t.block().dims().dim_zl)?.twist_by_sign())
}

pub fn gamma_tilde(t: &GreenTable, iota: usize) -> Result<GGGExpansion> {
    if iota >= t.num_pairs() {
        return Err(Error::Malformed(format!("pair index {iota} out of range")));
    }
    let theta = sgn_z(t)?.mul(&t.qtilde()[iota].map(LaurentPoly::star))?;
    let (x, y) = qg_transport(t, &theta)?;
    Ok(GGGExpansion { pair: iota, x, y })
}

/// A rational unipotent class: its support and the index `a` of `u_a` among
/// the classes of the support's Y-table (0 when there is none).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnipotentRef {
    pub support: String,
    pub class: usize,
}

impl UnipotentRef {
    pub fn new(support: impl Into<String>, class: usize) -> Self {
        UnipotentRef {
            support: support.into(),
            class,
        }
    }
}

/// `Y_ι(u)` for the pairs of `t` supported on the class of `u`; empty when
/// the block has no such pair.
pub fn y_values(b: &BlockDescriptor, u: &UnipotentRef) -> Result<Vec<(usize, ExactScalar)>> {
    let Some(s) = b.supports().iter().position(|x| *x == u.support) else {
        return Ok(Vec::new());
    };
    match b.y_table(&u.support) {
        Some(t) => {
            if u.class >= t.classes.len() {
                return Err(Error::Malformed(format!(
                    "class {} of {} out of range",
                    u.class, u.support
                )));
            }
            Ok(t.rows
                .iter()
                .map(|(i, row)| (*i, row[u.class].clone()))
                .collect())
        }
        None => {
            let pairs: Vec<usize> = (0..b.num_pairs())
                .filter(|&i| b.support_index(i) == s)
                .collect();
            if pairs.len() != 1 || u.class != 0 {
                return Err(Error::MissingYTable(u.support.clone()));
            }
            Ok(vec![(pairs[0], ExactScalar::int(1))])
        }
    }
}

fn lift(p: &LaurentPoly) -> ExactPoly {
    p.map_coeffs(|c| ExactScalar::rational(c.clone()))
}

/// Common `c_ι` of the pairs supported on `u`.
fn support_c(b: &BlockDescriptor, pairs: &[(usize, ExactScalar)]) -> Result<Rational> {
    let c = pairs
        .first()
        .map(|(i, _)| b.pair(*i).c())
        .unwrap_or_else(Rational::zero);
    if pairs.iter().any(|(i, _)| b.pair(*i).c() != c) {
        return Err(Error::invariant(
            "support",
            "pairs on one support have different c",
        ));
    }
    Ok(c)
}

/// `Γ̃_u = sum_ι conj(Ỹ*_ι(u)) Γ̃_ι = q^{-c} sum_ι conj(Y_ι(u)) Γ̃_ι`, stored
/// without the factor `q^{-c}`, which may be a half-integral power.
#[derive(Debug, Clone, PartialEq)]
pub struct GammaU {
    pub c: Rational,
    /// `conj(Y_ι(u))`, the coefficients on the `Γ̃_ι`.
    pub on_gamma: Vec<ExactScalar>,
    /// Coefficients of `q^c Γ̃_u` on the `Ỹ_κ`.
    pub y: Vec<ExactPoly>,
}

pub fn gamma_u_tilde(t: &GreenTable, u: &UnipotentRef) -> Result<GammaU> {
    let b = t.block();
    let n = t.num_pairs();
    let ys = y_values(b, u)?;
    let mut on_gamma = vec![ExactScalar::zero(); n];
    let mut y = vec![ExactPoly::zero(); n];
    for (i, v) in &ys {
        let coef = ExactPoly::constant(v.conj());
        let g = gamma_tilde(t, *i)?;
        for (acc, x) in y.iter_mut().zip(&g.y) {
            *acc = acc.clone() + &(&coef * &lift(x));
        }
        on_gamma[*i] = v.conj();
    }
    Ok(GammaU {
        c: support_c(b, &ys)?,
        on_gamma,
        y,
    })
}

/// The `Ỹ`-coefficients of `q^c Γ̃_u` as `q^c Q^G(sgn · Z · conj(Q_-*(u)))`.
pub fn gamma_u_tilde_direct(t: &GreenTable, u: &UnipotentRef) -> Result<Vec<ExactPoly>> {
    let b = t.block();
    let w = b.group().clone();
    let mut f = ClassFunction::constant(w.clone(), ExactPoly::zero());
    for (i, v) in y_values(b, u)? {
        let coef = ExactPoly::constant(v.conj());
        f = f.add(&t.qtilde()[i].map(|p| lift(&p.star()) * &coef))?;
    }
    let theta = f.mul(&sgn_z(t)?.map(lift))?;
    t.qtilde()
        .iter()
        .map(|q| theta.inner_product(&q.map(lift)))
        .collect()
}

/// Orthogonal projection of `Γ_u` to the block, `ζ⁻¹ q^c Γ̃_u`, as
/// coefficients on the `Γ̃_ι`.
pub fn gamma_u_projection(
    t: &GreenTable,
    u: &UnipotentRef,
    signs: &SignData,
) -> Result<Vec<ExactScalar>> {
    let zinv = signs.zeta().inv().expect("root of unity");
    Ok(gamma_u_tilde(t, u)?
        .on_gamma
        .into_iter()
        .map(|x| x * &zinv)
        .collect())
}

/// `⟨Γ̃_ι, D Γ̃_κ⟩`, computed through the `X̃` Gram matrix and checked
/// against `ε_G q^{dim Z_L} (Λ̃⁻¹)*[ι][κ]`.
pub fn ggg_gram(t: &GreenTable, iota: usize, kappa: usize) -> Result<RationalFunction> {
    let s = SignData::of_block(t.block());
    let gi = gamma_tilde(t, iota)?;
    let gk = gamma_tilde(t, kappa)?;
    let lhs = scalar_product_x(t, &gi.x, &duality(t, &gk.x, s.eta_l));
    let linv = inverse(&t.lambda_tilde()).ok_or_else(|| Error::SingularBlock("Λ̃".into()))?;
    let rhs = linv[iota][kappa].star().mul_poly(&LaurentPoly::monomial(
        rat(s.eps_g),
        t.block().dims().dim_zl as i64,
    ));
    if lhs != rhs {
        return Err(Error::invariant(
            format!(
                "ggg_gram[{}][{}]",
                t.block().pair(iota).id,
                t.block().pair(kappa).id
            ),
            format!("{lhs} via Q^G, {rhs} via Λ̃"),
        ));
    }
    Ok(lhs)
}

/// The full matrix of [`ggg_gram`], as Laurent polynomials.
pub fn ggg_gram_matrix(t: &GreenTable) -> Result<matrix::Matrix<LaurentPoly>> {
    let n = t.num_pairs();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|k| {
                    ggg_gram(t, i, k)?
                        .as_laurent()
                        .ok_or_else(|| Error::NonPolynomial(format!("ggg_gram[{i}][{k}]")))
                })
                .collect()
        })
        .collect()
}

/// A finite linear group whose unipotent blocks are all given.
#[derive(Debug, Clone)]
pub struct LinearGroup {
    pub kind: LinearKind,
    pub n: usize,
    pub tables: Vec<GreenTable>,
}

/// Left and right sides of an orthogonality relation.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthogonalityReport {
    pub lhs: ExactPoly,
    pub rhs: ExactPoly,
    pub equal: bool,
}

fn jordan_type(u: &UnipotentRef) -> Result<Vec<usize>> {
    parse_partition(&u.support)
}

/// `⟨Γ_u, D Γ_v⟩`: summed over blocks from the projections of `Γ_u` and
/// `Γ_v` and the Gram matrices of the `Γ̃_ι`, against
/// `ε_G ε_{C(u)} |C_{G^F}(u)|_{q'}` when `u` and `v` are conjugate and 0 otherwise.
pub fn ggg_orthogonality_u(
    g: &LinearGroup,
    u: &UnipotentRef,
    v: &UnipotentRef,
) -> Result<OrthogonalityReport> {
    let mut lhs = ExactPoly::zero();
    let mut eps_g = None;
    for t in &g.tables {
        let s = SignData::of_block(t.block());
        eps_g = Some(s.eps_g);
        let pu = gamma_u_projection(t, u, &s)?;
        let pv = gamma_u_projection(t, v, &s)?;
        if pu.iter().all(Zero::is_zero) || pv.iter().all(Zero::is_zero) {
            continue;
        }
        let gram = ggg_gram_matrix(t)?;
        for (i, a) in pu.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (k, c) in pv.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let coef = a.clone() * &c.conj();
                lhs += &lift(&gram[i][k]).scale(&coef);
            }
        }
    }
    let eps_g = eps_g.ok_or_else(|| Error::UnsupportedGroup("no blocks".into()))?;
    let rhs = if u == v {
        let lambda = jordan_type(u)?;
        let c = centralizer_order(g.kind, &lambda);
        let (_, qp) = c.qprime_split()?;
        lift(&qp.scale(&rat(eps_g * centralizer_eps(g.kind, &lambda))))
    } else {
        ExactPoly::zero()
    };
    Ok(OrthogonalityReport {
        equal: lhs == rhs,
        lhs,
        rhs,
    })
}

/// `Q_-(u): w -> Q_w(u) = sum_ι Q̃_ι(w) Ỹ_ι(u)`, without the factor
/// `q^c` of the support of `u`.
pub fn q_minus(t: &GreenTable, u: &UnipotentRef) -> Result<(Rational, ClassFunction<ExactPoly>)> {
    let b = t.block();
    let ys = y_values(b, u)?;
    let mut f = ClassFunction::constant(b.group().clone(), ExactPoly::zero());
    for (i, v) in &ys {
        let coef = ExactPoly::constant(v.clone());
        f = f.add(&t.qtilde()[*i].map(|p| lift(p) * &coef))?;
    }
    Ok((support_c(b, &ys)?, f))
}

/// `sum_I ⟨Q_-(u), Z Q_-(v)⟩` over the blocks of `g`, against
/// `|C_{G^F}(u)|` when `u = v` and 0 otherwise.
pub fn allorth(g: &LinearGroup, u: &UnipotentRef, v: &UnipotentRef) -> Result<OrthogonalityReport> {
    let mut lhs = ExactPoly::zero();
    for t in &g.tables {
        let z = torus_order_function(t.block().group(), t.block().dims().dim_zl)?.map(lift);
        let (cu, fu) = q_minus(t, u)?;
        let (cv, fv) = q_minus(t, v)?;
        let s = fu.inner_product(&fv.mul(&z)?)?;
        if s.is_zero() {
            continue;
        }
        let e = cu + cv;
        if !e.is_integer() {
            return Err(Error::NonPolynomial(format!("q^{e} in allorth")));
        }
        lhs += &s.shift(i64::try_from(e.to_integer()).expect("small exponent"));
    }
    let rhs = if u == v {
        lift(&centralizer_order(g.kind, &jordan_type(u)?))
    } else {
        ExactPoly::zero()
    };
    Ok(OrthogonalityReport {
        equal: lhs == rhs,
        lhs,
        rhs,
    })
}

/// True when `v` is the zero vector or `x ↦ v` is the indicator of `k`.
pub fn is_unit_vector(v: &[ExactScalar], k: usize) -> bool {
    v.iter()
        .enumerate()
        .all(|(i, x)| if i == k { x.is_one() } else { x.is_zero() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::gl_principal_block;
    use crate::exactalg::lp;
    use crate::lusztig::factorize;

    fn gl(n: usize) -> GreenTable {
        factorize(&gl_principal_block(n).unwrap()).unwrap()
    }

    #[test]
    fn gl2_regular_gamma() {
        let t = gl(2);
        let reg = t.block().pair_by_id("2").unwrap();
        let triv = t.block().pair_by_id("1+1").unwrap();
        let g = gamma_tilde(&t, reg).unwrap();
        assert_eq!(g.x[triv], lp(&[(2, 1), (1, -1)]));
        assert_eq!(g.x[reg], lp(&[(1, -1), (0, 1)]));
        let vals = t.evaluate_y(&g.y).unwrap();
        let at = |s: &str| vals.iter().find(|v| v.support == s).unwrap().values[0].clone();
        assert_eq!(at("1+1"), lift(&lp(&[(3, 1), (2, -1), (1, -1), (0, 1)])));
        assert_eq!(at("2"), lift(&lp(&[(1, -1), (0, 1)])));
        assert_eq!(
            ggg_gram(&t, reg, reg).unwrap(),
            RationalFunction::from_poly(lp(&[(0, 1), (1, -1)]))
        );
    }

    #[test]
    fn trivial_block_gamma() {
        let t = gl(1);
        let g = gamma_tilde(&t, 0).unwrap();
        assert_eq!(g.x, vec![lp(&[(1, 1), (0, -1)])]);
    }

    #[test]
    fn gl_signs() {
        let s = SignData::of_block(&gl_principal_block(3).unwrap());
        assert_eq!((s.eps_g, s.eta_l, s.sigma_l, s.eta_g), (-1, 1, 1, 1));
        assert_eq!(s.zeta_tilde(), ExactScalar::int(1));
    }
}
