//! Crate-wide error type for contract and resource failures.

use thiserror::Error;

/// Errors raised by syntax construction, evaluation, and the enumeration oracles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An identifier does not satisfy the atom naming rules.
    #[error("invalid atom name `{name}`: {reason}")]
    InvalidAtomName { name: String, reason: String },

    /// A definition rule body contains a nested definition.
    #[error("rule body for `{head}` contains a nested definition")]
    MalformedDefinition { head: String },

    /// Polarity was requested for an atom that occurs inside a nested definition.
    #[error("polarity of `{atom}` is undefined: the atom occurs inside a nested definition")]
    PolarityUnderDefinition { atom: String },

    /// Evaluation met an atom the interpretation does not assign.
    #[error("unknown atom `{atom}`: not assigned by the interpretation")]
    UnknownAtom { atom: String },

    /// An enumeration oracle or the prover was asked to range over too many atoms or branches.
    #[error("resource limit: {what} of {size} exceeds the bound of {bound}")]
    ResourceLimit {
        what: &'static str,
        size: usize,
        bound: usize,
    },

    /// An operation was called outside its documented precondition.
    #[error("contract violation in {operation}: {reason}")]
    Contract {
        operation: &'static str,
        reason: String,
    },
}

impl Error {
    /// Builds a contract-violation error for `operation`.
    pub fn contract(operation: &'static str, reason: impl Into<String>) -> Self {
        Error::Contract {
            operation,
            reason: reason.into(),
        }
    }
}
