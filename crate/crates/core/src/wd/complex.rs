use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::linalg::Matrix;
use crate::matgroup::{ad_lie_operator, ad_operator, invariant_subalgebra, LieSubspace};

use super::triple::WDTriple;

/// Dimensions of the cohomology of `C⁰ → C¹ → C²` together with the differentials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyReport {
    pub gamma: usize,
    pub h0: usize,
    pub h1: usize,
    pub h2: usize,
    #[serde(skip)]
    pub d0: Option<Matrix>,
    #[serde(skip)]
    pub d1: Option<Matrix>,
}

impl CohomologyReport {
    pub fn dims(&self) -> (usize, usize, usize) {
        (self.h0, self.h1, self.h2)
    }

    pub fn without_differentials(&self) -> CohomologyReport {
        CohomologyReport { d0: None, d1: None, ..self.clone() }
    }
}

/// The data shared by every point of a fiber with fixed `(N, τ, q)`:
/// `𝔤^I` and `ad N` on it; the Frobenius varies.
#[derive(Clone, Debug)]
pub struct Fiber {
    template: WDTriple,
    invariant: LieSubspace,
    ad_n: Matrix,
}

impl Fiber {
    /// Does not validate; use [`WDTriple::validate`] first where needed.
    pub fn new(d: &WDTriple) -> Result<Self> {
        let lie = d.group.lie_algebra();
        let invariant = invariant_subalgebra(&d.inertial.matrices(), &lie)?;
        let ad_n = ad_lie_operator(&d.nilpotent, &invariant)?;
        Ok(Fiber { template: d.clone(), invariant, ad_n })
    }

    pub fn template(&self) -> &WDTriple {
        &self.template
    }

    /// `𝔤^I`
    pub fn invariant(&self) -> &LieSubspace {
        &self.invariant
    }

    pub fn gamma(&self) -> usize {
        self.invariant.dim()
    }

    pub fn ad_n(&self) -> &Matrix {
        &self.ad_n
    }

    pub fn triple(&self, phi: &Matrix) -> WDTriple {
        self.template.with_phi(phi.clone())
    }

    pub fn ad_phi(&self, phi: &Matrix) -> Result<Matrix> {
        ad_operator(phi, &self.invariant)
    }

    /// `q·AdΦ − 1` on `𝔤^I`.
    pub fn q_ad_phi_minus_one(&self, phi: &Matrix) -> Result<Matrix> {
        let k = self.invariant.field();
        let a = self.ad_phi(phi)?;
        Ok(&a.scale(&self.template.q) - &Matrix::identity(k, a.rows()))
    }

    /// `dim ker(q AdΦ − 1)` on `𝔤^I`.
    pub fn bad_kernel_dim(&self, phi: &Matrix) -> Result<usize> {
        let m = self.q_ad_phi_minus_one(phi)?;
        Ok(m.cols() - m.rank())
    }

    pub fn differentials(&self, phi: &Matrix) -> Result<(Matrix, Matrix)> {
        let k = self.invariant.field();
        let g = self.gamma();
        let id = Matrix::identity(k, g);
        let a = self.ad_phi(phi)?;
        let b = &self.ad_n;
        let d0 = (&id - &a).vstack(&-b);
        let qa = &a.scale(&self.template.q) - &id;
        let d1 = b.hstack(&-&qa);
        Ok((d0, d1))
    }

    pub fn cohomology(&self, phi: &Matrix) -> Result<CohomologyReport> {
        let g = self.gamma();
        let (d0, d1) = self.differentials(phi)?;
        let r0 = d0.rank();
        let r1 = d1.rank();
        Ok(CohomologyReport { gamma: g, h0: g - r0, h1: 2 * g - r1 - r0, h2: g - r1, d0: Some(d0), d1: Some(d1) })
    }

    /// `(q AdΦ − 1) ⊕ ad N` surjective on `𝔤^I`.
    pub fn is_unobstructed(&self, phi: &Matrix) -> Result<bool> {
        let m = self.q_ad_phi_minus_one(phi)?.hstack(&self.ad_n);
        Ok(m.rank() == self.gamma())
    }
}

/// The deformation complex of a valid triple.
pub fn deformation_complex(d: &WDTriple) -> Result<CohomologyReport> {
    d.validate()?;
    Fiber::new(d)?.cohomology(&d.phi)
}

pub fn is_unobstructed(d: &WDTriple) -> Result<bool> {
    d.validate()?;
    Fiber::new(d)?.is_unobstructed(&d.phi)
}
