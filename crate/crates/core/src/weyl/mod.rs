//! Finite Weyl groups: conjugacy classes, character tables, reflection
//! representations, class functions, restriction and induction.

mod classfn;
mod descriptor;
mod fusion;
mod group;
pub mod linalg;
mod torus;

pub use classfn::{fusion_restrict, induce, ClassFunction};
pub use descriptor::{CoxeterDescriptor, CoxeterFactor, Family, MAX_A_RANK, MAX_BCD_RANK};
pub use fusion::Fusion;
pub use group::{
    class_key_label, hyperoctahedral_character, symmetric_character, CharKey, Character, ClassKey,
    ConjugacyClass, WeylGroup,
};
pub use torus::{exterior_reflection_characters, reflection_determinant, torus_order_function};

use std::sync::Arc;

use crate::error::Result;

/// Builds the Weyl group of the given Coxeter type.
pub fn build_group(descriptor: &CoxeterDescriptor) -> Result<Arc<WeylGroup>> {
    WeylGroup::build(descriptor)
}
