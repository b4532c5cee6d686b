//! Error type shared by every module.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Domain errors. Each variant has a stable name (see [`Error::name`]) that the
/// command-line front end prints on stderr.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("κ must be nonzero")]
    ZeroKappa,
    #[error("product leaves the span {{1, κ, κ⁻¹}}: {0}")]
    OutOfSpan(String),
    #[error("scalars use incompatible values of κ")]
    MixedKappa,
    #[error("ℓ must be at least {min}, got {got}")]
    InvalidEll { min: usize, got: usize },
    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("a rational value is required here, got {0}")]
    NotRational(String),
    #[error("invalid hyperplane: {0}")]
    InvalidHyperplane(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("box {0} is not addable")]
    NotAddable(String),
    #[error("degenerate ordering: {0}")]
    DegenerateOrder(String),
    #[error("model violation: {0}")]
    ModelViolation(String),
    #[error("inconsistent decomposition: {0}")]
    InconsistentDecomposition(String),
    #[error("search space too large: {0}")]
    ResourceLimit(String),
    #[error("Grassmannian Gr({v},{w}) needs w > 2v")]
    InvalidGrassmannian { v: u64, w: u64 },
    #[error("hyperplane {0} is not aspherical for this n")]
    NotAspherical(String),
    #[error("ideal index {index} out of range for a chain of {len} ideals")]
    IndexOutOfRange { index: usize, len: usize },
}

impl Error {
    /// Stable machine-readable name of the error variant.
    pub fn name(&self) -> &'static str {
        match self {
            Error::ZeroKappa => "ZeroKappa",
            Error::OutOfSpan(_) => "OutOfSpan",
            Error::MixedKappa => "MixedKappa",
            Error::InvalidEll { .. } => "InvalidEll",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::NotRational(_) => "NotRational",
            Error::InvalidHyperplane(_) => "InvalidHyperplane",
            Error::Parse(_) => "Parse",
            Error::NotAddable(_) => "NotAddable",
            Error::DegenerateOrder(_) => "DegenerateOrder",
            Error::ModelViolation(_) => "ModelViolation",
            Error::InconsistentDecomposition(_) => "InconsistentDecomposition",
            Error::ResourceLimit(_) => "ResourceLimit",
            Error::InvalidGrassmannian { .. } => "InvalidGrassmannian",
            Error::NotAspherical(_) => "NotAspherical",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
        }
    }
}
