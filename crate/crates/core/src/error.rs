use thiserror::Error;

use crate::wd::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomial must be nonzero")]
    ZeroPolynomial,
    #[error("minimal polynomial must be monic of positive degree")]
    NotMonic,
    #[error("polynomial {0} is reducible over the rationals")]
    Reducible(String),
    #[error("no mixing coefficient up to {0} yields a primitive element")]
    PrimitiveElementSearchFailed(i64),
    #[error("{0} is not an eigenvalue")]
    NotAnEigenvalue(String),
    #[error("operator is not semisimple (minimal polynomial has repeated factors)")]
    NotSemisimple,
    #[error("subspace is not invariant under the operator")]
    NotInvariant,
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("matrix is not unipotent")]
    NotUnipotent,
    #[error("matrix is not invertible")]
    Singular,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("nilpotent element is zero")]
    ZeroNilpotent,
    #[error("linear solve failed: {0}")]
    LinearSolveFailed(String),
    #[error("Ad(g)e is not the stated multiple of e")]
    EigenvalueRelationBroken,
    #[error("grading element has non-integral eigenvalues")]
    NonIntegralWeights,
    #[error("cocharacter is not adapted to the nilpotent")]
    NotAdapted,
    #[error("field is too small: {0}")]
    InsufficientField(String),
    #[error("pair is not a cocycle (not in ker d1)")]
    NotACocycle,
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("invariant violated: {0}")]
    InvariantViolated(String),
    #[error("no t-candidate accepted after {0} trials")]
    TrialExhausted(usize),
    #[error("walk exceeded the step limit of {0}")]
    StepLimitExceeded(usize),
    #[error("wrong walk case: {0}")]
    WrongCase(String),
    #[error("walks support only GL(n)")]
    UnsupportedGroupKind,
    #[error("generation infeasible: {0}")]
    GenerationInfeasible(String),
    #[error("invalid inertial data: {0}")]
    InvalidInertialData(String),
    #[error("invalid triple: {}", format_violations(.0))]
    InvalidTriple(Vec<Violation>),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn format_violations(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

impl Error {
    /// Stable machine-readable tag used in JSON error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::NotMonic => "NotMonic",
            Error::Reducible(_) => "Reducible",
            Error::PrimitiveElementSearchFailed(_) => "PrimitiveElementSearchFailed",
            Error::NotAnEigenvalue(_) => "NotAnEigenvalue",
            Error::NotSemisimple => "NotSemisimple",
            Error::NotInvariant => "NotInvariant",
            Error::NotNilpotent => "NotNilpotent",
            Error::NotUnipotent => "NotUnipotent",
            Error::Singular => "Singular",
            Error::Dimension(_) => "Dimension",
            Error::ZeroNilpotent => "ZeroNilpotent",
            Error::LinearSolveFailed(_) => "LinearSolveFailed",
            Error::EigenvalueRelationBroken => "EigenvalueRelationBroken",
            Error::NonIntegralWeights => "NonIntegralWeights",
            Error::NotAdapted => "NotAdapted",
            Error::InsufficientField(_) => "InsufficientField",
            Error::NotACocycle => "NotACocycle",
            Error::VerificationFailed(_) => "VerificationFailed",
            Error::InvariantViolated(_) => "InvariantViolated",
            Error::TrialExhausted(_) => "TrialExhausted",
            Error::StepLimitExceeded(_) => "StepLimitExceeded",
            Error::WrongCase(_) => "WrongCase",
            Error::UnsupportedGroupKind => "UnsupportedGroupKind",
            Error::GenerationInfeasible(_) => "GenerationInfeasible",
            Error::InvalidInertialData(_) => "InvalidInertialData",
            Error::InvalidTriple(_) => "InvalidTriple",
            Error::Parse(_) => "Parse",
            Error::Json(_) => "Json",
            Error::Io(_) => "Io",
        }
    }
}
