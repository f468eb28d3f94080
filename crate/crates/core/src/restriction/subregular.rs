use num_traits::Zero;

use super::LeviEmbedding;
use crate::blocks::{BlockDescriptor, SubregularSystem};
use crate::error::{Error, Result};
use crate::exactalg::{rat, LaurentPoly, Rational};
use crate::weyl::ClassFunction;

/// `Q̃_σ` for a pair on the subregular class, read off from the dataset
/// record: `q⁻¹ + φ_σ` for a standard pair, `φ_σ` otherwise.
pub fn subregular_qtilde(
    system: &SubregularSystem,
    b: &BlockDescriptor,
    sigma: usize,
) -> Result<ClassFunction<LaurentPoly>> {
    let w = b.group();
    let chi = &w.characters()[b.pair(sigma).phi];
    if let Some(label) = &system.phi_label {
        if &chi.label != label {
            return Err(Error::Malformed(format!(
                "pair {} has character {} but the record names {label}",
                b.pair(sigma).id,
                chi.label
            )));
        }
    }
    if system.standard && chi.values != w.reflection_values() {
        return Err(Error::NonStandard(format!(
            "{} is not the reflection character",
            chi.label
        )));
    }
    let shift = if system.standard {
        LaurentPoly::monomial(rat(1), -1)
    } else {
        LaurentPoly::zero()
    };
    Ok(ClassFunction::from_fn(w.clone(), |c| {
        &shift + &LaurentPoly::constant(rat(chi.values[c]))
    }))
}

/// Closed form for the restriction of a standard subregular pair.
#[derive(Debug, Clone, PartialEq)]
pub struct SubregularRestriction {
    /// Number of irreducible components of `W_M(L)` with a subregular class.
    pub k: usize,
    /// The standard subregular pairs `σ_i` of the sub-block.
    pub sigma_i: Vec<usize>,
    pub rho_m: usize,
    /// `(1-k) q⁻¹ + deg φ_σ - sum_i deg φ_{σ_i}`.
    pub coefficient: LaurentPoly,
    /// Coefficients of `Res Q̃_σ` on the `Q̃^M_γ`.
    pub qtilde: Vec<LaurentPoly>,
    /// Coefficients of `*R Γ_σ` on the `Γ^M_γ`, with the `a`-ratios and the
    /// sign `ε_G ε_M`.
    pub gamma: Vec<LaurentPoly>,
}

pub fn subregular_restriction(e: &LeviEmbedding, sigma: usize) -> Result<SubregularRestriction> {
    let g = e.ambient().group();
    let m = e.sub().group();
    let phi = &g.characters()[e.ambient().pair(sigma).phi];
    if phi.values != g.reflection_values() {
        return Err(Error::NonStandard(format!(
            "pair {}",
            e.ambient().pair(sigma).id
        )));
    }
    let rho_m = e
        .sub()
        .regular_pair()
        .ok_or_else(|| Error::Malformed("sub-block has no regular pair".into()))?;
    let refl_m = ClassFunction::<Rational>::from_fn(m.clone(), |c| rat(m.reflection_values()[c]));
    let sigma_i: Vec<usize> = refl_m
        .decompose()
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(chi, x)| {
            assert!(
                *x == rat(1),
                "reflection constituents are multiplicity free"
            );
            e.sub().pair_of_character(chi)
        })
        .collect();
    let k = sigma_i.len();
    let deg = |b: &BlockDescriptor, i: usize| b.group().characters()[b.pair(i).phi].degree();
    let constant = phi.degree() - sigma_i.iter().map(|&s| deg(e.sub(), s)).sum::<i64>();
    let lead = rat(1 - k as i64);
    let coefficient =
        &LaurentPoly::monomial(lead.clone(), -1) + &LaurentPoly::constant(rat(constant));
    let n = e.sub().num_pairs();
    let mut qtilde = vec![LaurentPoly::zero(); n];
    for &s in &sigma_i {
        qtilde[s] = &qtilde[s] + &LaurentPoly::constant(rat(1));
    }
    qtilde[rho_m] = &qtilde[rho_m] + &coefficient;
    let a_sigma = e.ambient().pair(sigma).a as i64;
    let sign = if (e.ambient().dims().rank + e.sub().dims().rank).is_multiple_of(2) {
        1
    } else {
        -1
    };
    let mut gamma = vec![LaurentPoly::zero(); n];
    for &s in &sigma_i {
        gamma[s] = &gamma[s]
            + &LaurentPoly::constant(Rational::new(
                (sign * a_sigma).into(),
                (e.sub().pair(s).a as i64).into(),
            ));
    }
    let ratio = Rational::new(
        (sign * a_sigma).into(),
        (e.sub().pair(rho_m).a as i64).into(),
    );
    gamma[rho_m] = &gamma[rho_m] + &coefficient.star().scale(&ratio);
    Ok(SubregularRestriction {
        k,
        sigma_i,
        rho_m,
        coefficient,
        qtilde,
        gamma,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::{gl_principal_block, subregular_lookup};
    use crate::exactalg::lp;

    #[test]
    fn gl3_to_gl2_gl1() {
        let e = LeviEmbedding::gl(&[2, 1]).unwrap();
        let s = e.ambient().pair_by_id("2+1").unwrap();
        let r = subregular_restriction(&e, s).unwrap();
        assert_eq!(r.k, 1);
        assert_eq!(r.coefficient, lp(&[(0, 1)]));
    }

    #[test]
    fn gl2_to_torus() {
        let e = LeviEmbedding::gl(&[1, 1]).unwrap();
        let s = e.ambient().pair_by_id("1+1").unwrap();
        let r = subregular_restriction(&e, s).unwrap();
        assert_eq!(r.k, 0);
        assert_eq!(r.coefficient, lp(&[(-1, 1), (0, 1)]));
        let reg = e.ambient().pair_by_id("2").unwrap();
        assert!(matches!(
            subregular_restriction(&e, reg),
            Err(Error::NonStandard(_))
        ));
    }

    #[test]
    fn gl2_qtilde_from_record() {
        let b = gl_principal_block(2).unwrap();
        let rec = subregular_lookup("A", 1).unwrap();
        let s = b.pair_by_id("1+1").unwrap();
        let q = subregular_qtilde(&rec.systems[0], &b, s).unwrap();
        assert_eq!(
            q.values(),
            &[lp(&[(0, 1), (-1, 1)]), lp(&[(0, -1), (-1, 1)])]
        );
    }
}
