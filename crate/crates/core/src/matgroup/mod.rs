//! Matrix groups, their Lie algebras, adjoint actions and the Jordan–Chevalley
//! decomposition.

mod group;
mod jordan;
mod lie;

pub use group::{GroupElement, GroupKind, GroupSpec};
pub use jordan::{exp_nilpotent, jordan_chevalley, log_unipotent};
pub use lie::{
    ad_lie_operator, ad_operator, centralizer_subspace, invariant_subalgebra, lie_algebra_basis,
    Action, LieSubspace,
};
