//! Lusztig restriction transported to `W_G(L)`: branching of characters,
//! the matrix `R` with `Res Q̃_ι = sum_γ R[ι][γ] Q̃^M_γ`, restriction of
//! generalized Green functions and of Gelfand-Graev characters, and the
//! closed forms for the regular and subregular pairs.

mod subregular;

use num_traits::{One, Zero};

use crate::blocks::{gl_levi_block, gl_principal_block, BlockDescriptor};
use crate::combinat::{parse_partition, Partition};
use crate::error::{Error, Result};
use crate::exactalg::matrix::{self, Matrix};
use crate::exactalg::{rat, LaurentPoly, Rational};
use crate::lusztig::GreenTable;
use crate::weyl::{fusion_restrict, ClassFunction, Fusion};

pub use subregular::{subregular_qtilde, subregular_restriction, SubregularRestriction};

/// Embedding of the block of a Levi subgroup `M` into a block of `G`,
/// through `W_M(L) ⊆ W_G(L)`.
#[derive(Debug, Clone)]
pub struct LeviEmbedding {
    ambient: BlockDescriptor,
    sub: BlockDescriptor,
    fusion: Fusion,
    /// Class of `W_G(L)` twisting the Frobenius on `M`; the identity class
    /// for split embeddings.
    twist_class: usize,
    eps: i64,
    /// For each sub-block support, the ambient support containing it, when
    /// known.
    saturation: Option<Vec<usize>>,
    composition: Option<Vec<usize>>,
}

fn group_matches(b: &BlockDescriptor, g: &std::sync::Arc<crate::weyl::WeylGroup>) -> bool {
    b.group().descriptor() == g.descriptor() && b.group().num_classes() == g.num_classes()
}

impl LeviEmbedding {
    /// Split embedding given by an explicit class fusion.
    pub fn new(ambient: BlockDescriptor, sub: BlockDescriptor, fusion: Fusion) -> Result<Self> {
        if !group_matches(&ambient, fusion.ambient()) || !group_matches(&sub, fusion.sub()) {
            return Err(Error::GroupMismatch);
        }
        Ok(LeviEmbedding {
            ambient,
            sub,
            fusion,
            twist_class: 0,
            eps: 1,
            saturation: None,
            composition: None,
        })
    }

    /// `GL_{n_1} x ... x GL_{n_r} ⊆ GL_n` with `W_M` the Young subgroup.
    pub fn gl(composition: &[usize]) -> Result<Self> {
        let fusion = Fusion::young(composition)?;
        let n = composition.iter().sum();
        let ambient = gl_principal_block(n)?;
        let sub = gl_levi_block(composition)?;
        let mut e = Self::new(ambient, sub, fusion)?;
        let sat = e
            .sub
            .supports()
            .iter()
            .map(|s| {
                let mut all: Partition = Vec::new();
                for part in s.split(" x ") {
                    all.extend(parse_partition(part)?);
                }
                all.sort_unstable_by(|a, b| b.cmp(a));
                let label = crate::combinat::partition_label(&all);
                e.ambient
                    .supports()
                    .iter()
                    .position(|t| *t == label)
                    .ok_or(Error::FusionUndefined(label))
            })
            .collect::<Result<Vec<_>>>()?;
        e.saturation = Some(sat);
        e.composition = Some(composition.to_vec());
        Ok(e)
    }

    /// `G ⊆ G`.
    pub fn identity(b: &BlockDescriptor) -> Result<Self> {
        let g = b.group().clone();
        let fusion = Fusion::new(g.clone(), g.clone(), (0..g.num_classes()).collect())?;
        let mut e = Self::new(b.clone(), b.clone(), fusion)?;
        e.saturation = Some((0..b.supports().len()).collect());
        Ok(e)
    }

    pub fn ambient(&self) -> &BlockDescriptor {
        &self.ambient
    }

    pub fn sub(&self) -> &BlockDescriptor {
        &self.sub
    }

    pub fn fusion(&self) -> &Fusion {
        &self.fusion
    }

    pub fn twist_class(&self) -> usize {
        self.twist_class
    }

    /// `ε_I(M) = ε^G(w)`.
    pub fn eps(&self) -> i64 {
        self.eps
    }

    pub fn composition(&self) -> Option<&[usize]> {
        self.composition.as_deref()
    }

    pub fn saturation(&self) -> Option<&[usize]> {
        self.saturation.as_deref()
    }

    /// Restriction of a class function of `W_G(L)` to `W_M(L)`.
    pub fn restrict<T: crate::exactalg::Ring>(
        &self,
        f: &ClassFunction<T>,
    ) -> Result<ClassFunction<T>> {
        let r = fusion_restrict(f, &self.fusion)?;
        ClassFunction::new(self.sub.group().clone(), r.values().to_vec())
    }

    fn check_tables(&self, tg: &GreenTable, tm: &GreenTable) -> Result<()> {
        if tg.block() != &self.ambient || tm.block() != &self.sub {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }
}

/// `ResMat[γ][ι] = ⟨φ_γ, Res φ_ι⟩` for sub-block pairs `γ` and ambient pairs `ι`.
pub fn branching_matrix(e: &LeviEmbedding) -> Matrix<i64> {
    let g = e.ambient.group();
    let m = e.sub.group();
    let res: Vec<ClassFunction<Rational>> = e
        .ambient
        .pairs()
        .iter()
        .map(|p| {
            e.restrict(&ClassFunction::<Rational>::character(g.clone(), p.phi))
                .expect("valid fusion")
        })
        .collect();
    e.sub
        .pairs()
        .iter()
        .map(|pg| {
            let chi = ClassFunction::<Rational>::character(m.clone(), pg.phi);
            res.iter()
                .map(|r| {
                    let v = chi.inner_product(r).expect("same group");
                    assert!(v.is_integer(), "non-integral branching multiplicity");
                    i64::try_from(v.to_integer()).expect("small multiplicity")
                })
                .collect()
        })
        .collect()
}

/// Inverse of an upper unitriangular matrix of Laurent polynomials.
pub fn unitriangular_inverse(p: &Matrix<LaurentPoly>) -> Matrix<LaurentPoly> {
    let n = p.len();
    let mut inv: Matrix<LaurentPoly> = matrix::identity(n);
    // column j of the inverse by back substitution
    for j in 0..n {
        for i in (0..j).rev() {
            let mut acc = LaurentPoly::zero();
            for k in i + 1..=j {
                if !p[i][k].is_zero() && !inv[k][j].is_zero() {
                    acc += &(&p[i][k] * &inv[k][j]);
                }
            }
            inv[i][j] = -acc;
        }
    }
    inv
}

/// Branching multiplicities and the matrix `R`.
#[derive(Debug, Clone, PartialEq)]
pub struct RestrictionData {
    /// `ResMat[γ][ι]`.
    pub branching: Matrix<i64>,
    /// `R[ι][γ]`, ambient pairs by sub-block pairs.
    pub r: Matrix<LaurentPoly>,
}

/// `R = P̃^G · ResMatᵀ · (P̃^M)⁻¹`, with the vanishing pattern checked
/// where the saturation of sub-block classes is known.
pub fn r_matrix(e: &LeviEmbedding, tg: &GreenTable, tm: &GreenTable) -> Result<RestrictionData> {
    e.check_tables(tg, tm)?;
    let branching = branching_matrix(e);
    let b = matrix::transpose(
        &branching
            .iter()
            .map(|r| r.iter().map(|&x| LaurentPoly::constant(rat(x))).collect())
            .collect(),
    );
    let r = matrix::mul(
        &matrix::mul(tg.ptilde(), &b),
        &unitriangular_inverse(tm.ptilde()),
    );
    // R P̃^M = P̃^G ResMatᵀ
    if matrix::mul(&r, tm.ptilde()) != matrix::mul(tg.ptilde(), &b) {
        return Err(Error::invariant("r", "R * P_M differs from P_G * Res"));
    }
    if let Some(sat) = &e.saturation {
        for (i, row) in r.iter().enumerate() {
            for (g, x) in row.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let s = sat[e.sub.support_index(g)];
                let k = (0..e.ambient.num_pairs())
                    .find(|&k| e.ambient.support_index(k) == s)
                    .expect("support has a pair");
                if !e.ambient.in_closure(k, i) {
                    return Err(Error::invariant(
                        format!("r[{}][{}]", e.ambient.pair(i).id, e.sub.pair(g).id),
                        "nonzero although the class is not in the closure",
                    ));
                }
            }
        }
    }
    Ok(RestrictionData { branching, r })
}

/// `⟨f, Q̃^M_δ⟩` for every sub-block pair.
fn y_coefficients(tm: &GreenTable, f: &ClassFunction<LaurentPoly>) -> Result<Vec<LaurentPoly>> {
    tm.qtilde().iter().map(|q| f.inner_product(q)).collect()
}

/// `Ỹ^M`-coefficients of `Q^M(Res θ)` computed by restricting `θ` directly.
pub fn restrict_direct(
    e: &LeviEmbedding,
    tm: &GreenTable,
    theta: &ClassFunction<LaurentPoly>,
) -> Result<Vec<LaurentPoly>> {
    y_coefficients(tm, &e.restrict(theta)?)
}

/// The same coefficients through `R`: write `θ = sum t_ι Q̃_ι`, then
/// `Res θ = sum_γ (Rᵀ t)_γ Q̃^M_γ`.
pub fn restrict_via_r(
    tg: &GreenTable,
    tm: &GreenTable,
    data: &RestrictionData,
    theta: &ClassFunction<LaurentPoly>,
) -> Result<Vec<LaurentPoly>> {
    let x = tg
        .block()
        .pairs()
        .iter()
        .map(|p| theta.inner_product(&ClassFunction::character(tg.block().group().clone(), p.phi)))
        .collect::<Result<Vec<_>>>()?;
    // x = P̃ᵀ t
    let t = matrix::mul_vec(&matrix::transpose(&unitriangular_inverse(tg.ptilde())), &x);
    let s = matrix::mul_vec(&matrix::transpose(&data.r), &t);
    let mg = tm.block().group().clone();
    let res = ClassFunction::from_fn(mg, |c| {
        s.iter()
            .zip(tm.qtilde())
            .fold(LaurentPoly::zero(), |acc, (si, q)| acc + &(si * q.value(c)))
    });
    y_coefficients(tm, &res)
}

/// `*R^G_M Q_v` as a combination of the `Q^M_{v'}`.
#[derive(Debug, Clone, PartialEq)]
pub struct GreenRestriction {
    /// `(v', coefficient)` over sub-group classes fusing to `v`.
    pub terms: Vec<(usize, Rational)>,
    /// `Ỹ^M`-coefficients of the result.
    pub y: Vec<LaurentPoly>,
}

/// Restriction of `Q_v`: the coefficient of `Q^M_{v'}` is
/// `|W_M|⁻¹ #{x ∈ W_G : x v x⁻¹ ∈ v'}`, which equals `|C_G(v)| / |C_M(v')|`
/// when `v'` fuses to `v`. The result is checked against the route through `R`.
pub fn restrict_green(
    e: &LeviEmbedding,
    tg: &GreenTable,
    tm: &GreenTable,
    data: &RestrictionData,
    v: usize,
) -> Result<GreenRestriction> {
    e.check_tables(tg, tm)?;
    let g = e.ambient.group();
    let m = e.sub.group();
    if v >= g.num_classes() {
        return Err(Error::Malformed(format!("class index {v} out of range")));
    }
    let cg = g.classes()[v].centralizer;
    let terms: Vec<(usize, Rational)> = e
        .fusion
        .map()
        .iter()
        .enumerate()
        .filter(|(_, &t)| t == v)
        .map(|(c, _)| {
            (
                c,
                Rational::new(
                    (cg as i64).into(),
                    (m.classes()[c].centralizer as i64).into(),
                ),
            )
        })
        .collect();
    let mut y = vec![LaurentPoly::zero(); e.sub.num_pairs()];
    for (c, coef) in &terms {
        let q = tm.green_function(*c)?;
        for (acc, x) in y.iter_mut().zip(&q.coefficients) {
            *acc = acc.clone() + &x.scale(coef);
        }
    }
    let gamma = ClassFunction::<LaurentPoly>::indicator(g.clone(), v)
        .scale(&LaurentPoly::constant(rat(cg as i64)));
    if restrict_via_r(tg, tm, data, &gamma)? != y {
        return Err(Error::invariant(
            "restrict_green",
            "counting formula and R route disagree",
        ));
    }
    Ok(GreenRestriction { terms, y })
}

/// `*R^G_M Γ̃_ι = ε_I(M) sum_γ R*[ι][γ] Γ̃^M_γ`: coefficients on the `Γ̃^M_γ`.
pub fn restrict_ggg(e: &LeviEmbedding, data: &RestrictionData, iota: usize) -> Vec<LaurentPoly> {
    data.r[iota]
        .iter()
        .map(|x| x.star().scale(&rat(e.eps)))
        .collect()
}

/// Indices of nonzero entries.
pub fn support_of(v: &[LaurentPoly]) -> Vec<usize> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, _)| i)
        .collect()
}

/// True when `v` is the indicator of `k`.
pub fn is_indicator(v: &[LaurentPoly], k: usize) -> bool {
    v.iter()
        .enumerate()
        .all(|(i, x)| if i == k { x.is_one() } else { x.is_zero() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::lp;
    use crate::lusztig::factorize;

    fn tables(e: &LeviEmbedding) -> (GreenTable, GreenTable) {
        (factorize(e.ambient()).unwrap(), factorize(e.sub()).unwrap())
    }

    #[test]
    fn gl2_to_torus() {
        let e = LeviEmbedding::gl(&[1, 1]).unwrap();
        let (tg, tm) = tables(&e);
        let d = r_matrix(&e, &tg, &tm).unwrap();
        let reg = e.ambient().pair_by_id("2").unwrap();
        let triv = e.ambient().pair_by_id("1+1").unwrap();
        assert_eq!(d.r[reg], vec![lp(&[(0, 1)])]);
        assert_eq!(d.r[triv], vec![lp(&[(0, 1), (-1, 1)])]);
        assert_eq!(restrict_ggg(&e, &d, triv), vec![lp(&[(0, 1), (1, 1)])]);
        assert!(is_indicator(&restrict_ggg(&e, &d, reg), 0));
        let one = restrict_green(&e, &tg, &tm, &d, 0).unwrap();
        assert_eq!(one.terms, vec![(0, rat(2))]);
        let s = restrict_green(&e, &tg, &tm, &d, 1).unwrap();
        assert!(s.terms.is_empty() && s.y.iter().all(Zero::is_zero));
    }

    #[test]
    fn gl3_branching() {
        let e = LeviEmbedding::gl(&[2, 1]).unwrap();
        let b = branching_matrix(&e);
        let i = e.ambient().pair_by_id("2+1").unwrap();
        let col: Vec<i64> = b.iter().map(|r| r[i]).collect();
        assert_eq!(col, vec![1, 1]);
    }

    #[test]
    fn self_embedding_is_identity() {
        let b = gl_principal_block(3).unwrap();
        let e = LeviEmbedding::identity(&b).unwrap();
        let (tg, tm) = tables(&e);
        let d = r_matrix(&e, &tg, &tm).unwrap();
        assert_eq!(d.r, matrix::identity(b.num_pairs()));
        for v in 0..b.group().num_classes() {
            let g = restrict_green(&e, &tg, &tm, &d, v).unwrap();
            assert_eq!(g.terms, vec![(v, rat(1))]);
        }
    }

    #[test]
    fn unitriangular_inverse_round_trip() {
        let p = vec![
            vec![lp(&[(0, 1)]), lp(&[(-1, 1)]), lp(&[(-3, 2)])],
            vec![lp(&[]), lp(&[(0, 1)]), lp(&[(-1, 1)])],
            vec![lp(&[]), lp(&[]), lp(&[(0, 1)])],
        ];
        assert_eq!(
            matrix::mul(&p, &unitriangular_inverse(&p)),
            matrix::identity(3)
        );
    }
}
