//! Finite left braces over abelian groups.
//!
//! Braces come from lambda tables, trivial-kernel extension data, matched
//! pairs or the quadratic-form families, and can be checked for ideals,
//! simplicity, isomorphism and their Yang-Baxter solutions.

pub mod arith;
pub mod automorphism;
pub mod brace;
pub mod descriptor;
pub mod error;
pub mod extension;
pub mod families;
pub mod group;
pub mod ideals;
pub mod iso;
pub mod matched;
pub mod matrix;
pub mod random;
pub mod subset;
pub mod ybe;

pub use automorphism::Automorphism;
pub use brace::{
    check_generated_iso, hall_decompose, inverse, is_two_sided, multiply, n_multiples, same_lambda,
    socle, trivial_brace, validate_brace, BraceReport, GroupPresentation, LambdaKind, LambdaTable,
    LeftBrace,
};
pub use descriptor::{parse_brace, serialize_brace, BraceDescriptor};
pub use error::{BraceError, Result};
pub use extension::{
    build_extension, extract_extension_data, find_trivial_ideals, validate_extension_data,
    ExtensionData,
};
pub use group::{decompose_abelian, enumeration_cap, set_enumeration_cap, AbelianGroup, Element};
pub use ideals::{enumerate_ideals, ideal_closure, is_ideal, is_left_ideal, is_simple};
pub use iso::{braces_isomorphic, BraceIsomorphism};
pub use matched::{
    build_matched_product, extract_matched_pair, matched_socle, multiplicative_matched_check,
    validate_matched_pair, MatchedPairData,
};
pub use matrix::{rank_mod_p, MatrixModP};
pub use subset::ElementSet;
pub use ybe::{
    derive_solution, verify_involutive, verify_nondegenerate, verify_ybe, SolutionTable,
};
