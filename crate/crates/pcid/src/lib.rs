//! A reasoning toolkit for propositional logic extended with inductive
//! definitions under the well-founded semantics.
//!
//! The crate is organized as a pipeline:
//!
//! - [`syntax`] — atoms, formulas, definitions, sequents.
//! - [`semantics`] — three-valued evaluation, well-founded models,
//!   satisfiability / validity / totality oracles.
//! - [`calculus`] — the sequent-calculus rules, proof trees, and the
//!   proof checker.
//! - [`prover`] — an automatic prover that emits checkable proofs.
//! - [`textio`] — parsing and canonical printing for every artifact.

pub mod calculus;
pub mod error;
pub mod prover;
pub mod semantics;
pub mod syntax;
pub mod textio;

pub use error::Error;
