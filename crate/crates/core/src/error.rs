//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("exponent vector has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,

    #[error("monomial quotient is not exact")]
    NonDivisible,

    #[error("{0} is undefined for the zero ideal")]
    ZeroIdeal(&'static str),

    #[error("{0} is undefined for the unit ideal")]
    UnitIdeal(&'static str),

    #[error("computation budget exceeded after {spairs} S-pairs")]
    BudgetExceeded { spairs: u64 },

    #[error("containment exponent exceeds cap {cap}")]
    ExponentCapExceeded { cap: u32 },

    #[error("uniform constant exceeds cap {cap} at h = {h}")]
    ArtinReesCapExceeded { h: u32, cap: u32 },

    #[error("sequence length {len} exceeds the permutation-test bound {bound}")]
    PermutationBoundExceeded { len: usize, bound: usize },

    #[error("not a regular sequence (fails at position {index}, witness {witness})")]
    NotRegular { index: usize, witness: String },

    #[error("not a permutable regular sequence (permutation {permutation} fails at position {index}, witness {witness})")]
    NotPermutable {
        permutation: String,
        index: usize,
        witness: String,
    },

    #[error("decomposition needs a monomial sequence: element {index} is not a monomial")]
    NonMonomialSequence { index: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// True for resource-limit failures, as opposed to malformed input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::BudgetExceeded { .. }
                | Error::ExponentCapExceeded { .. }
                | Error::ArtinReesCapExceeded { .. }
                | Error::PermutationBoundExceeded { .. }
        )
    }
}
