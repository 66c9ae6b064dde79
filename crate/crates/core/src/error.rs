use thiserror::Error;

use crate::geom::IntPoint;

/// Every failure the library can report.
///
/// Variant names double as the stable error identifiers emitted by the CLI
/// and mapped to status codes by the C ABI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),

    #[error("invalid cone: {0}")]
    InvalidCone(String),

    #[error("point count exceeds the configured limit of {limit}")]
    CapacityExceeded { limit: usize },

    #[error("gap {0} lies outside the cone")]
    GapOutsideCone(IntPoint),

    #[error("the origin cannot be a gap")]
    ZeroGap,

    #[error("gap set is not closed: {gap} = {left} + {right} with both summands in the semigroup")]
    NotClosed {
        gap: IntPoint,
        left: IntPoint,
        right: IntPoint,
    },

    #[error("gap set is empty")]
    EmptyGapSet,

    #[error("{0} is not an element of the semigroup")]
    NotAMember(IntPoint),

    #[error("shift must be nonzero")]
    ZeroShift,

    #[error("ray index {index} out of range (cone has {count} extremal rays)")]
    InvalidRay { index: usize, count: usize },

    #[error("invalid numerical semigroup: {0}")]
    InvalidNumerical(String),

    #[error("generator {0} lies outside the cone")]
    GeneratorOutsideCone(IntPoint),

    #[error("generator set is empty")]
    NoGenerators,

    #[error("extremal ray {ray} carries a generator set with gcd {gcd}; infinitely many gaps")]
    NotCofinite { ray: IntPoint, gcd: u64 },

    #[error("every point {start} + t*{step} (t >= 0) is a gap")]
    InfiniteGapFamily { start: IntPoint, step: IntPoint },

    #[error("no generator lies on extremal ray {0}; generated cone differs from the ambient cone")]
    ConeMismatch(IntPoint),

    #[error("expansion budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("point {0} lies outside the cone")]
    PointOutsideCone(IntPoint),

    #[error("the origin cannot be used here")]
    ZeroPoint,

    #[error("pattern is the whole of N; nothing to bound")]
    DegeneratePattern,

    #[error("weight cap {cap} is too small: {reason}")]
    CapTooSmall { cap: i64, reason: String },

    #[error("invalid input: {0}")]
    Parse(String),
}

impl Error {
    /// Stable identifier of the variant (used on the CLI and across the C ABI).
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::UnsupportedDimension(_) => "UnsupportedDimension",
            Error::InvalidCone(_) => "InvalidCone",
            Error::CapacityExceeded { .. } => "CapacityExceeded",
            Error::GapOutsideCone(_) => "GapOutsideCone",
            Error::ZeroGap => "ZeroGap",
            Error::NotClosed { .. } => "NotClosed",
            Error::EmptyGapSet => "EmptyGapSet",
            Error::NotAMember(_) => "NotAMember",
            Error::ZeroShift => "ZeroShift",
            Error::InvalidRay { .. } => "InvalidRay",
            Error::InvalidNumerical(_) => "InvalidNumerical",
            Error::GeneratorOutsideCone(_) => "GeneratorOutsideCone",
            Error::NoGenerators => "NoGenerators",
            Error::NotCofinite { .. } => "NotCofinite",
            Error::InfiniteGapFamily { .. } => "InfiniteGapFamily",
            Error::ConeMismatch(_) => "ConeMismatch",
            Error::BudgetExceeded(_) => "BudgetExceeded",
            Error::PointOutsideCone(_) => "PointOutsideCone",
            Error::ZeroPoint => "ZeroPoint",
            Error::DegeneratePattern => "DegeneratePattern",
            Error::CapTooSmall { .. } => "CapTooSmall",
            Error::Parse(_) => "Parse",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
