//! Three-valued semantics: truth values, interpretations, Kleene
//! evaluation, the well-founded construction, and enumeration oracles for
//! validity, satisfiability, and totality.

mod eval;
mod interp;
mod oracle;
mod truth;
mod wf;

pub use eval::{eval3, truth};
pub use interp::{Interpretation, Vocabulary};
pub use oracle::{
    is_total, is_valid, satisfiable, Bounds, InterpretationEnumeration, Sat, Totality, Validity,
};
pub use truth::TruthValue;
pub use wf::{
    eligible_derive_true, greatest_unfounded_set, is_total_at, is_unfounded, wf_model, wf_trace,
    DefaultPolicy, StepPolicy, WfStep, WfStepKind, WfTrace,
};
