use std::sync::Arc;

use super::classfn::ClassFunction;
use super::group::WeylGroup;
use crate::error::{Error, Result};
use crate::exactalg::{rat, LaurentPoly, Rational};

/// Characters of the exterior powers `Λ^i` of the reflection representation,
/// `i = 0..=l`, read off from `det(t I - M(w)) = sum_i (-1)^i tr(Λ^i M(w)) t^{l-i}`.
pub fn exterior_reflection_characters(w: &Arc<WeylGroup>) -> Vec<ClassFunction<Rational>> {
    let l = w.rank();
    let polys = w.char_polys();
    (0..=l)
        .map(|i| {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            ClassFunction::from_fn(w.clone(), |c| rat(sign * polys[c][l - i]))
        })
        .collect()
}

/// `det(q I - M(w))` on the reflection representation.
pub fn reflection_determinant(w: &Arc<WeylGroup>) -> ClassFunction<LaurentPoly> {
    let polys = w.char_polys();
    ClassFunction::from_fn(w.clone(), |c| {
        LaurentPoly::from_coeffs(&polys[c].iter().map(|&x| rat(x)).collect::<Vec<_>>())
    })
}

/// Torus order function `Z(w) = (q - 1)^{ambient - l} det(q I - M(w))` for a
/// torus of dimension `ambient_rank` on which `W` acts through its reflection
/// representation plus a trivial part.
pub fn torus_order_function(
    w: &Arc<WeylGroup>,
    ambient_rank: usize,
) -> Result<ClassFunction<LaurentPoly>> {
    if ambient_rank < w.rank() {
        return Err(Error::UnsupportedRank(format!(
            "ambient rank {ambient_rank} below reflection rank {}",
            w.rank()
        )));
    }
    let factor = LaurentPoly::from_coeffs(&[rat(-1), rat(1)]).pow((ambient_rank - w.rank()) as u32);
    Ok(reflection_determinant(w).map(|v| v * &factor))
}
