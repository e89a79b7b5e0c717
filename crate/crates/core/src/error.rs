use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: i128,
        reason: &'static str,
    },

    #[error("degree at position {index} is {value}, degrees must be positive")]
    NonPositiveDegree { index: usize, value: i64 },

    #[error("degree list must not be empty")]
    EmptyDegreeList,

    #[error("malformed integer list {0:?}")]
    MalformedList(String),

    #[error("multinomial parts sum to {parts_sum}, expected {total}")]
    MultinomialMismatch { total: u64, parts_sum: u64 },

    #[error("{value} is not divisible by 2^{exponent}")]
    InexactDivision { value: String, exponent: u32 },

    #[error("{what} exceeds the enumeration bound: {got} > {limit}")]
    SizeLimit {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    #[error("Prüfer sequence for {n} vertices must have length {expected}, got {got}")]
    PrueferLength { n: u32, expected: usize, got: usize },

    #[error("Prüfer entry {value} at position {index} is outside 1..={n}")]
    PrueferEntry { index: usize, value: u32, n: u32 },

    #[error("invalid tree: {0}")]
    InvalidTree(&'static str),

    #[error("invalid graph: {0}")]
    InvalidGraph(&'static str),
}
