use crate::exactfield::FieldElement;
use crate::linalg::Matrix;
use crate::sl2::Cocharacter;
use crate::wd::{CohomologyReport, WDTriple};

/// The witnesses defining a one-parameter family `t ↦ Φ(t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MoveFamily {
    /// `left · exp(tY) · right` with `Y` nilpotent.
    UnipotentLine { left: Matrix, log: Matrix, right: Matrix },
    /// `base · λ(t)`
    CocharScale { base: Matrix, cocharacter: Cocharacter },
    /// `base · λ(shift·t) · λ′(t⁻¹)`
    CocharInterpolation { base: Matrix, lambda: Cocharacter, lambda_prime: Cocharacter, shift: FieldElement },
}

impl MoveFamily {
    pub fn kind(&self) -> &'static str {
        match self {
            MoveFamily::UnipotentLine { .. } => "UnipotentLine",
            MoveFamily::CocharScale { .. } => "CocharScale",
            MoveFamily::CocharInterpolation { .. } => "CocharInterpolation",
        }
    }
}

/// One family, traversed from parameter `from` (value `start`) to `to` (value `end`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkMove {
    pub family: MoveFamily,
    pub from: FieldElement,
    pub to: FieldElement,
    pub start: Matrix,
    pub end: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkCertificate {
    pub initial: WDTriple,
    pub moves: Vec<WalkMove>,
    pub final_phi: Matrix,
    pub final_report: CohomologyReport,
}

impl WalkCertificate {
    pub fn final_triple(&self) -> WDTriple {
        self.initial.with_phi(self.final_phi.clone())
    }
}
