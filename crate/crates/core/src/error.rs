use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid simple Lie type {family}{rank}")]
    InvalidType { family: char, rank: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("sublattice has rank {rank} < ambient rank {ambient}; quotient is infinite")]
    InfiniteQuotient { rank: usize, ambient: usize },
    #[error("Weyl group of order {order} exceeds cap {cap}")]
    GroupTooLarge { order: u64, cap: u64 },
    #[error("torus of order {order} exceeds cap {cap}")]
    TorusTooLarge { order: u64, cap: u64 },
    #[error("{what} exceeds cap {cap}")]
    CapExceeded { what: &'static str, cap: u64 },
    #[error("torus element lies in a mirror")]
    MirrorElement,
    #[error("lattice does not contain the level lattice R_l")]
    NotIntermediate,
    #[error("value {value} is not within {tolerance} of an integer ({what})")]
    RoundingFailure { what: &'static str, value: f64, tolerance: f64 },
    #[error("extension produced a non-integer entry for label {label}")]
    NonIntegerEntry { label: String },
    #[error("label {label} is unreachable from the fundamental generators")]
    Unreachable { label: String },
    #[error("schema error: {0}")]
    Schema(String),
    #[error("grade mismatch: {0}")]
    GradeMismatch(String),
    #[error("representation carries no Z(g)-grading")]
    NotGraded,
    #[error("graph is not an ADE Dynkin diagram: {0}")]
    NotAde(String),
    #[error("quantity expected to be integral is not: {0}")]
    NonIntegral(String),
    #[error("weight is not dominant")]
    NotDominant,
    #[error("label is not in the alcove")]
    NotInAlcove,
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("invalid configuration: {0}")]
    InvalidConfig(&'static str),
}
