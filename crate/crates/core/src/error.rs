//! Error type shared by all modules of the crate.

use crate::class::CurveClass;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("space must have at least one factor")]
    EmptySpace,
    #[error("projective factor dimensions must be at least 1, got {0}")]
    InvalidDimension(u32),
    #[error("chern coefficients must be at least 1, got {0}")]
    InvalidChernCoefficient(u64),
    #[error("curve class must have at least one coefficient")]
    EmptyClass,
    #[error("curve class {found} has {} components but the space has {expected} factors", .found.len())]
    DimensionMismatch { expected: usize, found: CurveClass },
    #[error("curve class must be nonzero")]
    ZeroClass,
    #[error("one-point invariant unavailable for class {0}")]
    InvariantUnavailable(CurveClass),
    #[error("anticanonical degree of class {0} overflows")]
    DegreeOverflow(CurveClass),
    #[error("contact constant of class {class} is {value}; the recursion needs it non-negative")]
    NegativeContactConstant { class: CurveClass, value: i64 },
    #[error("no stored count for class {0}")]
    MissingCount(CurveClass),
    #[error("partition budget of {limit} exceeded while expanding class {class}")]
    PartitionBudgetExceeded { class: CurveClass, limit: u64 },
    #[error("bit budget of {limit} exceeded at class {class}: value needs {observed} bits")]
    BitBudgetExceeded {
        class: CurveClass,
        limit: u64,
        observed: u64,
    },
    #[error("brute-force cap of total degree {cap} exceeded by class {class} (total degree {degree})")]
    BruteforceCapExceeded {
        class: CurveClass,
        cap: u64,
        degree: u64,
    },
    #[error("malformed curve class {input:?}: {reason}")]
    MalformedClass { input: String, reason: String },
    #[error("malformed rational {input:?}: {reason}")]
    MalformedRational { input: String, reason: String },
    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("invalid cache file: {0}")]
    InvalidCache(String),
    #[error("cache file version {0} is not supported")]
    UnsupportedCacheVersion(u32),
    #[error("cache file was computed for a different space")]
    CacheSpaceMismatch,
    #[error("cache persistence requires a product space")]
    CacheNeedsProductSpace,
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for errors raised by a resource cap rather than by bad input.
    pub fn is_budget_exceeded(&self) -> bool {
        matches!(
            self,
            Error::PartitionBudgetExceeded { .. }
                | Error::BitBudgetExceeded { .. }
                | Error::BruteforceCapExceeded { .. }
        )
    }
}
