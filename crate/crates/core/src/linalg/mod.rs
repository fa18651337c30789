//! Dense exact linear algebra over a number field.

mod matrix;
mod subspace;

pub use matrix::Matrix;
pub use subspace::Subspace;

use crate::exactfield::FieldElement;

/// Column vector over `K`.
pub type Vector = Vec<FieldElement>;

pub fn is_zero_vector(v: &[FieldElement]) -> bool {
    v.iter().all(|x| x.is_zero())
}
