use thiserror::Error;

/// Crate-wide error type. Budget exhaustion during search is deliberately not
/// an error: searches return a partial result flagged `exact: false` instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse group '{text}': {reason}")]
    GroupParse { text: String, reason: String },

    #[error("invariant factors {0:?} must each exceed 1 and form a divisibility chain")]
    InvariantChain(Vec<u64>),

    #[error("group order overflows a 64-bit integer")]
    OrderOverflow,

    #[error("element has {got} coordinates, group has rank {want}")]
    DimensionMismatch { want: usize, got: usize },

    #[error("coordinate {value} out of range for modulus {modulus}")]
    CoordinateRange { value: u64, modulus: u64 },

    #[error("order filter must be a positive divisor candidate, got 0")]
    InvalidOrderFilter,

    #[error("{d} does not divide the group exponent {exponent}")]
    NotDivisorOfExponent { d: u64, exponent: u64 },

    #[error("invalid divisor pair: need d' | d | exp(G), got d'={d_prime}, d={d}, exp={exponent}")]
    InvalidDivisorPair { d_prime: u64, d: u64, exponent: u64 },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{0} is not a valid argument here, expected a positive integer")]
    NotPositive(u64),

    #[error("input {n} exceeds the factorization limit {limit}")]
    BeyondFactorLimit { n: u64, limit: u64 },

    #[error("prime table holds {have} primes, need at least {need}")]
    SieveTooSmall { need: usize, have: usize },

    #[error("no constant configured for rank {0}; supply one explicitly")]
    MissingConstant(usize),

    #[error("constant for rank {rank} is {value}, below the proven value {proven}")]
    ConstantBelowProven {
        rank: usize,
        value: String,
        proven: String,
    },

    #[error("{m} does not divide {n}")]
    NotDivisible { m: u64, n: u64 },

    #[error("rank-gap certificates require rank >= 4, got {0}")]
    GapRankTooSmall(usize),

    #[error("rank-gap certificate arithmetic overflows for rank {0}")]
    GapRankTooLarge(usize),

    #[error("no valid exponent alpha in the certificate window for rank {0}")]
    GapWindowEmpty(usize),

    #[error("group of order {order} exceeds the search engine limit {limit}")]
    GroupTooLarge { order: u64, limit: u64 },

    #[error("sum table of {cells} cells exceeds the limit {limit}")]
    TableTooLarge { cells: u64, limit: u64 },

    #[error("expected {expected} values, got {got}")]
    WrongValueCount { expected: usize, got: usize },

    #[error("cannot parse sequence at '{at}': {reason}")]
    SequenceParse { at: usize, reason: String },

    #[error("extraction precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("group is not a p-group")]
    NotPGroup,
}

pub type Result<T> = std::result::Result<T, Error>;
