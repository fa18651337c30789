//! Exact computations with G-Weil–Deligne triples `(Φ, N, τ)` over number fields.
//!
//! The crate is organised bottom-up:
//!
//! - [`exactfield`]: number fields `ℚ[x]/(f)`, polynomials, rational factorization,
//!   root finding, field extension and spectral projectors.
//! - [`linalg`]: dense exact matrices and subspaces over a number field.
//! - [`matgroup`]: matrix groups, Lie subalgebras, adjoint operators,
//!   Jordan–Chevalley decomposition and nilpotent exp/log.
//! - [`sl2`]: Jacobson–Morozov triples, cocharacters, weight gradings and
//!   lowest-weight splittings.
//! - [`wd`]: Weil–Deligne triples, their deformation complex and lift spaces.
//! - [`walk`]: the unobstruction walk and its independent certificate checker.
//! - [`scenario`]: JSON interchange, random scenario generation and the command
//!   dispatcher behind the `wdwalk` binary.
//!
//! Everything is exact; there is no floating point anywhere.

pub mod error;
pub mod exactfield;
pub mod linalg;
pub mod matgroup;
pub mod scenario;
pub mod sl2;
pub mod walk;
pub mod wd;

pub use error::{Error, Result};
pub use exactfield::{Field, FieldDescriptor, FieldElement, RationalPoly, UnivariatePoly};
pub use linalg::Matrix;
