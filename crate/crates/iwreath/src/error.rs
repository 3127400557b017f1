use thiserror::Error;

/// Errors produced by construction and validation routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate source point {0}")]
    DuplicateSource(usize),
    #[error("duplicate image point {0}")]
    DuplicateImage(usize),
    #[error("point {point} out of range 1..={n}")]
    PointOutOfRange { point: usize, n: usize },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("duplicate point {0} in support")]
    DuplicatePoint(usize),
    #[error("empty support")]
    EmptySupport,
    #[error("rank {requested} exceeds the configured bound {bound}")]
    RankTooLarge { requested: usize, bound: usize },
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("component {0} is not a valid cross-section")]
    ComponentNotCrossSection(usize),
    #[error("candidate set is not a cross-section: {0}")]
    NotCrossSection(String),
    #[error("no defining partition is recoverable")]
    NoPartitionRecoverable,
    #[error("semigroup too large: {size} > {bound}")]
    TooLarge { size: usize, bound: usize },
    #[error("ambient semigroup too large to enumerate")]
    AmbientTooLarge,
    #[error("semigroup has no identity element")]
    NoIdentity,
    #[error("map is not an isomorphism")]
    NotIsomorphism,
    #[error("conjugacy postcondition failed: {0}")]
    TheoremFalsified(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
