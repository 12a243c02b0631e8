//! Exact computer algebra for primary decompositions of powers of regular
//! sequences.
//!
//! The crate is generic over the coefficient [`field::Field`]; the monomial
//! layer never touches coefficients at all. Concrete instantiations over the
//! rationals and over prime fields are aliased below.

pub mod error;
pub mod field;
pub mod groebner;
pub mod ideal;
pub mod monomial;
pub mod poly;
pub mod regseq;
pub mod ring;
pub mod uniformity;

pub use error::{Error, Result};
pub use field::{Field, PrimeField, Rationals};
pub use ideal::{computation_budget, set_computation_budget, Ideal};
pub use monomial::{
    containment_exponent, monomials_of_degree, MonomialIdeal, MonomialPrime, PrimaryComponent,
};
pub use poly::{Polynomial, Term};
pub use regseq::{
    colon_identity_check, is_permutable_regular_sequence, is_regular_sequence,
    PermutabilityVerdict, PowerVector, RegularSequence, RegularityVerdict,
    DEFAULT_PERMUTATION_BOUND,
};
pub use ring::{ExponentVec, MonomialOrder, OrderKind, PolyRing, VarSet};
pub use uniformity::{
    artin_rees_constant, decompose_power, power_sweep, sweep, ArtinReesReport, DecompositionRow,
    PrimeInput, SweepReport,
};

/// Polynomials over the rationals.
pub type QPolynomial = Polynomial<Rationals>;
/// Ideals over the rationals.
pub type QIdeal = Ideal<Rationals>;
/// Regular sequences over the rationals.
pub type QRegularSequence = RegularSequence<Rationals>;
/// Polynomials over a prime field.
pub type FpPolynomial = Polynomial<PrimeField>;
/// Ideals over a prime field.
pub type FpIdeal = Ideal<PrimeField>;
/// Regular sequences over a prime field.
pub type FpRegularSequence = RegularSequence<PrimeField>;
