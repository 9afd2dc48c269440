//! Syntax of propositional logic with inductive definitions: atoms,
//! formulas, definitions, and sequents.

mod atom;
mod definition;
mod formula;
mod sequent;

pub use atom::{Atom, AtomKind, SUFFIX_PRIMED, SUFFIX_RENAMED_NEG, SUFFIX_RENAMED_POS};
pub use definition::Definition;
pub use formula::{Formula, Polarity};
pub use sequent::Sequent;
