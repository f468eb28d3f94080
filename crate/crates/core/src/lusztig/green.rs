use num_traits::Zero;

use super::GreenTable;
use crate::error::{Error, Result};
use crate::exactalg::matrix;
use crate::exactalg::{rat, ExactScalar, LaurentPoly, RationalFunction, Ring};
use crate::weyl::{torus_order_function, ClassFunction};

/// Generalized Green function `Q_w` of a block, as coefficients on the
/// basis `Ỹ_ι = q^{c_ι} Y_ι`.
#[derive(Debug, Clone, PartialEq)]
pub struct GreenFunction {
    /// Class of `W_G(L)`.
    pub class: usize,
    /// Coefficient of `Ỹ_ι`, one per pair in total order.
    pub coefficients: Vec<LaurentPoly>,
}

/// Values of a combination of the `Ỹ_ι` on the rational classes `u_a` of
/// one support.
#[derive(Debug, Clone, PartialEq)]
pub struct UnipotentValues {
    pub support: String,
    pub classes: Vec<String>,
    pub values: Vec<LaurentPoly<ExactScalar>>,
}

impl GreenTable {
    /// `Q_w = sum_ι Q̃_ι(w) Ỹ_ι`.
    pub fn green_function(&self, class: usize) -> Result<GreenFunction> {
        if class >= self.block.group().num_classes() {
            return Err(Error::Malformed(format!(
                "class index {class} out of range"
            )));
        }
        Ok(GreenFunction {
            class,
            coefficients: self.qtilde.iter().map(|f| f.value(class).clone()).collect(),
        })
    }

    pub fn green_function_by_label(&self, label: &str) -> Result<GreenFunction> {
        let c = self
            .block
            .group()
            .class_by_label(label)
            .ok_or_else(|| Error::Malformed(format!("no class {label:?}")))?;
        self.green_function(c)
    }

    /// Evaluates `sum_ι y_ι Ỹ_ι` on every rational unipotent class, using the
    /// block's Y-tables. A support carrying a single pair and no table is
    /// taken to be one rational class on which `Y_ι = 1`.
    pub fn evaluate_y(&self, y: &[LaurentPoly]) -> Result<Vec<UnipotentValues>> {
        let b = &self.block;
        let mut out = Vec::new();
        for g in b.support_groups() {
            let support = b.pair(g.start).support.clone();
            let shifted = |i: usize| -> Result<LaurentPoly<ExactScalar>> {
                let c = b.c_int(i).ok_or_else(|| {
                    Error::NonPolynomial(format!("c of {} is not an integer", b.pair(i).id))
                })?;
                Ok(y[i]
                    .shift(c)
                    .map_coeffs(|x| ExactScalar::rational(x.clone())))
            };
            match b.y_table(&support) {
                Some(t) => {
                    let mut values = vec![LaurentPoly::<ExactScalar>::zero(); t.classes.len()];
                    for (i, row) in &t.rows {
                        let f = shifted(*i)?;
                        for (v, yv) in values.iter_mut().zip(row) {
                            *v = v.clone() + &f.scale(yv);
                        }
                    }
                    out.push(UnipotentValues {
                        support,
                        classes: t.classes.clone(),
                        values,
                    });
                }
                None if g.len() == 1 => out.push(UnipotentValues {
                    support,
                    classes: vec!["1".into()],
                    values: vec![shifted(g.start)?],
                }),
                None => return Err(Error::MissingYTable(support)),
            }
        }
        Ok(out)
    }
}

fn characters(t: &GreenTable) -> Vec<ClassFunction<LaurentPoly>> {
    let b = t.block();
    b.pairs()
        .iter()
        .map(|p| ClassFunction::character(b.group().clone(), p.phi))
        .collect()
}

/// Coefficients of `Q^G(θ)` on the `X̃_ι` (first) and on the `Ỹ_ι` (second):
/// `⟨θ, φ_ι⟩` and `⟨θ, Q̃_ι⟩`.
pub fn qg_transport(
    t: &GreenTable,
    theta: &ClassFunction<LaurentPoly>,
) -> Result<(Vec<LaurentPoly>, Vec<LaurentPoly>)> {
    let x = characters(t)
        .iter()
        .map(|phi| theta.inner_product(phi))
        .collect::<Result<Vec<_>>>()?;
    let y = t
        .qtilde()
        .iter()
        .map(|q| theta.inner_product(q))
        .collect::<Result<Vec<_>>>()?;
    Ok((x, y))
}

/// Alvis-Curtis duality on `X̃`-coefficients: the coefficient of `X̃_ι`
/// moves to `X̃_ι̂` multiplied by `η_L ε_ι`.
pub fn duality(t: &GreenTable, f: &[LaurentPoly], eta_l: i64) -> Vec<LaurentPoly> {
    let b = t.block();
    let mut out = vec![LaurentPoly::zero(); f.len()];
    for (i, v) in f.iter().enumerate() {
        let p = b.pair(i);
        out[p.dual] = v.scale(&rat(eta_l * p.eps));
    }
    out
}

/// `⟨Q^G θ, Q^G θ'⟩` from `X̃`-coefficients through the Gram matrix `Ξ̃`.
pub fn scalar_product_x(t: &GreenTable, x: &[LaurentPoly], y: &[LaurentPoly]) -> RationalFunction {
    let xi = t.xi_tilde();
    let yr: Vec<RationalFunction> = y
        .iter()
        .map(|v| RationalFunction::from_poly(v.conj()))
        .collect();
    let xiy = matrix::mul_vec(&xi, &yr);
    x.iter()
        .zip(&xiy)
        .fold(RationalFunction::zero(), |acc, (a, b)| acc + &b.mul_poly(a))
}

/// `⟨Q_w, Q_{w'}⟩`.
pub fn scalar_product_green(t: &GreenTable, w: usize, w2: usize) -> Result<RationalFunction> {
    let g = t.block().group().clone();
    let n = g.num_classes();
    if w >= n || w2 >= n {
        return Err(Error::Malformed("class index out of range".into()));
    }
    let x = |c: usize| {
        characters(t)
            .iter()
            .map(|phi| phi.value(c).clone())
            .collect::<Vec<_>>()
    };
    Ok(scalar_product_x(t, &x(w), &x(w2)))
}

/// `|C_W(w)| / Z(w)` with `Z` the order of the torus `Z_L^{0wF}`.
pub fn green_norm_formula(t: &GreenTable, w: usize) -> Result<RationalFunction> {
    let g = t.block().group();
    let z = torus_order_function(g, t.block().dims().dim_zl)?;
    RationalFunction::new(
        LaurentPoly::constant(rat(g.classes()[w].centralizer as i64)),
        z.value(w).clone(),
    )
}
