//! The sequent calculus: rule schemas, proof trees, the proof checker, and
//! rule applicability.

mod applicable;
mod check;
mod proof;
mod rule;

pub use applicable::{applicable_rules, RuleTemplate};
pub use check::{check_proof, discharge_totality, CheckFailure, CheckReport};
pub use proof::ProofTree;
pub use rule::{ParamSpec, Params, RuleError, RuleInstance, RuleName};
