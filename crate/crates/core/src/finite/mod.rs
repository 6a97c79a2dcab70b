//! Finite commutative algebras over GF(p) and their modules, where
//! isomorphism questions can be settled by search.

pub mod algebra;
pub mod exec;
pub mod linalg;
pub mod module;
pub mod oracle;

pub use algebra::FiniteAlgebra;
pub use exec::Exec;
pub use linalg::FpMatrix;
pub use module::{
    dual_map, evaluation_map, finite_dual, hom_space, lemma_check_finite, FiniteDual, FiniteModule,
};
pub use oracle::{iso_search, proposition_check, IsoOutcome, PropositionReport};
