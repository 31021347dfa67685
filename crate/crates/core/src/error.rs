use thiserror::Error;

/// Errors raised by group construction and the structural queries built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("closure exceeded the element cap of {cap}")]
    CapExceeded { cap: usize },

    #[error("element is not in the group")]
    ElementNotInGroup,

    #[error("subgroups belong to different parent groups")]
    MismatchedParents,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("group is not soluble")]
    InsolubleInput,

    #[error("subgroup is not elementary abelian")]
    NotElementaryAbelian,

    #[error("map does not extend to an automorphism: {0}")]
    NotAnAutomorphism(String),

    #[error("orders {left} and {right} are not coprime")]
    NonCoprime { left: u64, right: u64 },

    #[error("Hall subgroup is not normal")]
    HallNotNormal,

    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),

    #[error("subgroup is not central of prime order")]
    NotCentralPrime,

    #[error("order {n} exceeds the configured bound {bound}")]
    BoundExceeded { n: u64, bound: u64 },

    #[error("{p} divides {m}")]
    PrimeDividesOrder { p: u64, m: u64 },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
