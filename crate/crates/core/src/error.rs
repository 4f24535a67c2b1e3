use thiserror::Error;

/// Errors reported by the construction, verification and search routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A vertex sequence is not a valid k-subset of `[0, n)`.
    #[error("invalid {k}-subset of [0, {n}): {reason}")]
    InvalidSubset { n: usize, k: usize, reason: String },

    #[error("rank {rank} out of range for C({n},{k}) = {total}")]
    RankOutOfRange {
        rank: u64,
        n: usize,
        k: usize,
        total: u64,
    },

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("not a permutation: {0}")]
    NotPermutation(String),

    /// Parameters outside the supported range, or violating an ordering such as `t < k < n`.
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("binomial coefficient C({n},{k}) overflows 64 bits")]
    Overflow { n: u64, k: u64 },

    /// The order does not satisfy the hypothesis of the construction.
    #[error("inadmissible order n = {n}: {condition}")]
    Inadmissible { n: usize, condition: String },

    #[error("division by 2 is undefined modulo even m = {0}")]
    EvenModulus(u64),

    /// An operation's mathematical precondition does not hold for this input.
    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("permutation is infeasible as an antimorphism: {odd_orbits} orbit(s) of odd length on {k}-subsets")]
    Infeasible { k: usize, odd_orbits: usize },

    #[error("{orbits} orbits give 2^{orbits} candidates, above the cap of {cap}; pass the truncation override to enumerate the first {cap} only")]
    CapExceeded { orbits: usize, cap: u64 },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("residue set is not periodic modulo {modulus} within n < {bound}")]
    NotPeriodic { modulus: u64, bound: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
