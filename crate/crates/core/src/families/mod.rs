//! Parameterized brace constructions over `F_p` vector spaces.

mod explicit;
mod hegedus;
mod quadratic;
mod simple;

use std::fmt;

pub use explicit::{construct_explicit_family, ExplicitConstruction};
pub use hegedus::{build_hegedus, find_hegedus_params, validate_hegedus, HegedusParams};
pub use quadratic::{eval_q, QuadraticForm};
pub use simple::{
    build_simple_family, construct_recursive, direct_sum_params, simple_family_matched_pair,
    simplicity_criterion, validate_simple_family, SimpleFamilyParams, SimplicityCriterion,
};

/// Which requirement a parameter set fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyCondition {
    NotPrime,
    Shape,
    Divisibility,
    /// `f` must have multiplicative order exactly `p`.
    FOrder,
    /// `Q(f(x)) = Q(x)`.
    FPreservesQ,
    /// `gamma` has order `p2` modulo `p1`.
    GammaOrder,
    /// `C` has order `p1`.
    COrder,
    /// `Q(C x) = Q(x) + z . x`.
    ConditionB,
    /// `F C = C^gamma F`.
    ConditionC,
    /// `n` must be even when `p2 = 2`.
    Parity,
    /// `z` must vanish when `p2 != 2`.
    NonzeroZ,
    Degenerate,
    /// `z + zC + ... + zC^{p1-1} = 0`.
    ZOrbitSum,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyViolation {
    pub condition: FamilyCondition,
    pub detail: String,
}

impl FamilyViolation {
    pub(crate) fn new(condition: FamilyCondition, detail: impl Into<String>) -> FamilyViolation {
        FamilyViolation {
            condition,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for FamilyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}: {}", self.condition, self.detail)
    }
}
