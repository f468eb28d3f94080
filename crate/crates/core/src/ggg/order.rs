use std::sync::Arc;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::combinat::{conjugate_square_sum, multiplicities, Partition};
use crate::error::{Error, Result};
use crate::exactalg::{rat, LaurentPoly};
use crate::weyl::{reflection_determinant, torus_order_function, WeylGroup};

/// `F_q`-groups whose order polynomial is generated here. All are split
/// except the twisted tori.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Gl(usize),
    Sl(usize),
    /// Maximal torus `T_w` of `GL_n`, `w` of the given cycle type.
    GlTorus(Partition),
    Product(Vec<GroupSpec>),
}

/// `GL_n` or `SL_n`, the groups with generated centralizer orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LinearKind {
    Gl,
    Sl,
}

fn q_minus(k: i64) -> LaurentPoly {
    LaurentPoly::from_terms([(k, rat(1)), (0, rat(-1))])
}

impl GroupSpec {
    pub fn dim(&self) -> usize {
        match self {
            GroupSpec::Gl(n) => n * n,
            GroupSpec::Sl(n) => n * n - 1,
            GroupSpec::GlTorus(mu) => mu.iter().sum(),
            GroupSpec::Product(f) => f.iter().map(GroupSpec::dim).sum(),
        }
    }

    pub fn fq_rank(&self) -> usize {
        match self {
            GroupSpec::Gl(n) => *n,
            GroupSpec::Sl(n) => n - 1,
            GroupSpec::GlTorus(mu) => mu.len(),
            GroupSpec::Product(f) => f.iter().map(GroupSpec::fq_rank).sum(),
        }
    }

    /// `ε_H = (-1)^{F_q-rank}`.
    pub fn eps(&self) -> i64 {
        if self.fq_rank().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// `|H^F|` as a polynomial in `q`.
pub fn order_polynomial(g: &GroupSpec) -> Result<LaurentPoly> {
    Ok(match g {
        GroupSpec::Gl(n) | GroupSpec::Sl(n) => {
            if *n == 0 {
                return Err(Error::UnsupportedGroup("rank 0".into()));
            }
            let mut p = LaurentPoly::q_pow((n * (n - 1) / 2) as i64);
            let start = if matches!(g, GroupSpec::Sl(_)) { 2 } else { 1 };
            for i in start..=*n as i64 {
                p = &p * &q_minus(i);
            }
            p
        }
        GroupSpec::GlTorus(mu) => {
            if mu.contains(&0) {
                return Err(Error::UnsupportedGroup(format!("cycle type {mu:?}")));
            }
            mu.iter()
                .fold(LaurentPoly::q_pow(0), |acc, &k| &acc * &q_minus(k as i64))
        }
        GroupSpec::Product(f) => {
            let mut p = LaurentPoly::q_pow(0);
            for h in f {
                p = &p * &order_polynomial(h)?;
            }
            p
        }
    })
}

/// Checks `|H^F|(q⁻¹) = q^{-dim H} ε_H |H^F|_{q'}`.
pub fn check_order_star(g: &GroupSpec) -> Result<()> {
    let p = order_polynomial(g)?;
    let (_, qprime) = p.qprime_split()?;
    let rhs = qprime.shift(-(g.dim() as i64)).scale(&rat(g.eps()));
    if p.star() != rhs {
        return Err(Error::invariant(
            format!("{g:?}"),
            format!("star of {p} differs from {rhs}"),
        ));
    }
    Ok(())
}

/// Checks `Z(q⁻¹) = ε_Z q^{-dim Z} sgn · Z(q)` class by class for the torus
/// of dimension `ambient_rank` on which `W` acts by its reflection
/// representation plus a trivial part.
pub fn check_z_star(w: &Arc<WeylGroup>, ambient_rank: usize) -> Result<()> {
    let z = torus_order_function(w, ambient_rank)?;
    let det = reflection_determinant(w);
    let eps = if ambient_rank.is_multiple_of(2) {
        1
    } else {
        -1
    };
    for (c, sgn) in w.sign_values().into_iter().enumerate() {
        // the reflection representation has determinant sgn(w)
        let d = det.value(c).coeff(0);
        let l = w.rank();
        let expected_det = if l.is_multiple_of(2) {
            rat(sgn)
        } else {
            rat(-sgn)
        };
        if d != expected_det {
            return Err(Error::invariant(
                format!("class {c}"),
                "determinant is not the sign",
            ));
        }
        let rhs = z
            .value(c)
            .shift(-(ambient_rank as i64))
            .scale(&rat(eps * sgn));
        if z.value(c).star() != rhs {
            return Err(Error::invariant(
                format!("class {}", w.classes()[c].label),
                "Z star identity fails",
            ));
        }
    }
    Ok(())
}

/// `|C_{G^F}(u)|` for `u` unipotent of Jordan type `lambda`. For `SL_n` the
/// value assumes `q ≡ 1 mod n`, so that each of the `gcd(lambda)` rational
/// classes in `C_lambda` has centralizer `gcd(lambda) |C_GL(u)| / (q - 1)`.
pub fn centralizer_order(kind: LinearKind, lambda: &[usize]) -> LaurentPoly {
    let mut p = LaurentPoly::q_pow(conjugate_square_sum(lambda) as i64);
    for &m in multiplicities(lambda).iter().skip(1) {
        for k in 1..=m as i64 {
            // 1 - q^{-k}
            p = &p * &LaurentPoly::from_terms([(0, rat(1)), (-k, rat(-1))]);
        }
    }
    match kind {
        LinearKind::Gl => p,
        LinearKind::Sl => {
            let g = lambda.iter().fold(0usize, |g, &x| g.gcd(&x));
            p.div_exact(&q_minus(1))
                .expect("(q - 1) divides |C_GL(u)|")
                .scale(&rat(g as i64))
        }
    }
}

/// `ε_{C_G(u)}`: the reductive part of `C_GL(u)` is `prod_i GL_{m_i}` of
/// `F_q`-rank `l(lambda)`; in `SL_n` one rank is lost to the determinant.
pub fn centralizer_eps(kind: LinearKind, lambda: &[usize]) -> i64 {
    let r = match kind {
        LinearKind::Gl => lambda.len(),
        LinearKind::Sl => lambda.len() - 1,
    };
    if r % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::lp;

    #[test]
    fn small_orders() {
        assert_eq!(
            order_polynomial(&GroupSpec::Gl(2)).unwrap(),
            lp(&[(4, 1), (3, -1), (2, -1), (1, 1)])
        );
        assert_eq!(
            order_polynomial(&GroupSpec::GlTorus(vec![3])).unwrap(),
            lp(&[(3, 1), (0, -1)])
        );
        check_order_star(&GroupSpec::Gl(2)).unwrap();
        check_order_star(&GroupSpec::Product(vec![
            GroupSpec::Sl(3),
            GroupSpec::GlTorus(vec![2, 1]),
        ]))
        .unwrap();
    }

    #[test]
    fn gl2_centralizers() {
        assert_eq!(
            centralizer_order(LinearKind::Gl, &[1, 1]),
            order_polynomial(&GroupSpec::Gl(2)).unwrap()
        );
        assert_eq!(
            centralizer_order(LinearKind::Gl, &[2]),
            lp(&[(2, 1), (1, -1)])
        );
        // SL_2, regular unipotent: 2q
        assert_eq!(centralizer_order(LinearKind::Sl, &[2]), lp(&[(1, 2)]));
    }
}
