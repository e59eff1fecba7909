use thiserror::Error;

/// Errors raised by the algebra, enumeration and density routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension {0} exceeds the supported maximum of 64")]
    DimensionTooLarge(usize),

    #[error("gram matrix is not symmetric")]
    NotSymmetric,

    #[error("gram matrix is degenerate over F2")]
    Degenerate,

    #[error("split index {split} is invalid for a space of dimension {dim}")]
    InvalidSplit { split: usize, dim: usize },

    #[error("gram matrix is not block-diagonal across the split at {0}")]
    SplitNotOrthogonal(usize),

    #[error("space has no split into V and W blocks")]
    SplitUnset,

    #[error("vector must be nonzero")]
    ZeroVector,

    #[error("subspace is not totally isotropic")]
    NotTotallyIsotropic,

    #[error("space dimension {dim} exceeds the enumeration cap {cap}")]
    EnumerationCap { dim: usize, cap: usize },

    #[error("no maximal totally isotropic subspace satisfies the constraint")]
    EmptyCandidateSet,

    #[error("index k = {k} is outside 0..={n}")]
    KOutOfRange { k: usize, n: usize },

    #[error("invalid model parameters: {0}")]
    InvalidParameters(String),

    #[error("inconsistent Selmer flags: {0}")]
    InconsistentFlags(String),

    #[error("degree {0} must be even")]
    OddDegree(usize),

    #[error("parity violation: {0}")]
    Parity(String),

    #[error("prime sets overlap at {0}")]
    OverlappingPrimeSets(u64),

    #[error("infinite prime families require degree > 2")]
    InfiniteFamilyInDegreeTwo,

    #[error("mass identity failed: {0}")]
    IdentityFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
