use thiserror::Error;

/// Everything that can go wrong in the library.
///
/// Each variant has a stable string code (see [`Error::code`]) that the CLI
/// and the C ABI report verbatim.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not symmetric (max asymmetry {asymmetry:e})")]
    NotSymmetric { asymmetry: f64 },
    #[error("matrix is not positive definite: {0}")]
    NotPositiveDefinite(String),
    #[error("matrix is not positive semidefinite (min eigenvalue {min_eigenvalue:e})")]
    NotPsd { min_eigenvalue: f64 },
    #[error("polynomial is identically zero")]
    ZeroPolynomial,
    #[error("eigensolver did not converge after {sweeps} sweeps")]
    ConvergenceFailure { sweeps: usize },
    #[error("freeness violated: eigenvalue {eigenvalue} of a' has an eigenvector {eigenvector:?} annihilated by a''")]
    FreenessViolated {
        eigenvalue: f64,
        eigenvector: Vec<f64>,
    },
    #[error("inconsistent signature: {0}")]
    SignatureInconsistent(String),
    #[error("a'' has rank {rank}, expected {expected}")]
    RankDeficientR { rank: usize, expected: usize },
    #[error("lattice matrix is singular")]
    SingularLattice,
    #[error("inconsistent holonomy: {0}")]
    InconsistentHolonomy(String),
    #[error("parameter must be nonzero: {0}")]
    ZeroParameter(&'static str),
    #[error("parabola is not degenerate (C has full rank)")]
    NotDegenerate,
    #[error("invalid characteristic parabola: {0}")]
    InvalidCharacteristic(String),
    #[error("not a characteristic parabola: {0}")]
    NotCharacteristic(String),
    #[error("degenerate parabola (k = {k}); reduce it first")]
    DegenerateK { k: usize },
    #[error("bad certificate: {0}")]
    BadCertificate(String),
    #[error("unsupported dimension: {0}")]
    UnsupportedDimension(String),
    #[error("C is singular")]
    CSingular,
    #[error("A is singular")]
    SingularA,
    #[error("spectrum of a' is not simple")]
    NotSimpleSpectrum,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::NotSymmetric { .. } => "NotSymmetric",
            Error::NotPositiveDefinite(_) => "NotPositiveDefinite",
            Error::NotPsd { .. } => "NotPSD",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::ConvergenceFailure { .. } => "ConvergenceFailure",
            Error::FreenessViolated { .. } => "FreenessViolated",
            Error::SignatureInconsistent(_) => "SignatureInconsistent",
            Error::RankDeficientR { .. } => "RankDeficientR",
            Error::SingularLattice => "SingularLattice",
            Error::InconsistentHolonomy(_) => "InconsistentHolonomy",
            Error::ZeroParameter(_) => "ZeroParameter",
            Error::NotDegenerate => "NotDegenerate",
            Error::InvalidCharacteristic(_) => "InvalidCharacteristic",
            Error::NotCharacteristic(_) => "NotCharacteristic",
            Error::DegenerateK { .. } => "DegenerateK",
            Error::BadCertificate(_) => "BadCertificate",
            Error::UnsupportedDimension(_) => "UnsupportedDimension",
            Error::CSingular => "CSingular",
            Error::SingularA => "SingularA",
            Error::NotSimpleSpectrum => "NotSimpleSpectrum",
            Error::InvalidInput(_) => "InvalidInput",
        }
    }

    pub(crate) fn dims(msg: impl Into<String>) -> Self {
        Error::DimensionMismatch(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
