use thiserror::Error;

use crate::brace::AxiomViolation;
use crate::extension::ExtensionViolation;
use crate::families::FamilyViolation;
use crate::matched::MatchedViolation;

#[derive(Debug, Error)]
pub enum BraceError {
    #[error("invalid modulus {0}: cyclic factors must have prime-power order at least 2")]
    InvalidModulus(u64),

    #[error("group order overflows the address space")]
    OrderOverflow,

    #[error("dimension mismatch: expected {expected} coordinates, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("coordinate {index} = {value} is not reduced modulo {modulus}")]
    UnreducedCoordinate {
        index: usize,
        value: u32,
        modulus: u32,
    },

    #[error("group of order {order} exceeds the enumeration cap {cap}")]
    EnumerationCap { order: usize, cap: usize },

    #[error("isomorphism search refused: order {order} exceeds cap {cap}")]
    IsomorphismCap { order: usize, cap: usize },

    #[error("map is not an additive automorphism: {0}")]
    NotAutomorphism(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("matrix shape mismatch: {0}")]
    Shape(String),

    #[error("brace must be validated before this operation")]
    NotValidated,

    #[error("left brace axioms fail: {0}")]
    InvalidBrace(AxiomViolation),

    #[error("extension data invalid: {0}")]
    InvalidExtension(ExtensionViolation),

    #[error("matched pair invalid: {0}")]
    InvalidMatchedPair(MatchedViolation),

    #[error("family parameters invalid: {0}")]
    InvalidFamily(FamilyViolation),

    #[error("subset is not an ideal")]
    NotAnIdeal,

    #[error("ideal does not have trivial brace structure: {0} * {1} != {0} + {1}")]
    NontrivialIdeal(String, String),

    #[error("subsets are not complementary left ideals: {0}")]
    NotComplementary(String),

    #[error("orders {0} and {1} are not coprime")]
    NotCoprime(usize, usize),

    #[error("{0}")]
    Precondition(String),

    #[error("descriptor: {0}")]
    Descriptor(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = BraceError> = std::result::Result<T, E>;
