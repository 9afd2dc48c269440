//! Proof trees: rule instances whose premises are proved by child trees.

use crate::calculus::{RuleError, RuleInstance};
use crate::syntax::Sequent;

/// A proof tree. Each node is a rule instance; child `i` proves premise `i`
/// of the instance. Leaves are instances of the axiom rules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofTree {
    pub instance: RuleInstance,
    pub children: Vec<ProofTree>,
}

impl ProofTree {
    /// Builds a node, checking that the children prove exactly the premises
    /// of the (already validated) instance, in order.
    pub fn new(instance: RuleInstance, children: Vec<ProofTree>) -> Result<ProofTree, RuleError> {
        if children.len() != instance.premises.len() {
            return Err(RuleError::Arity {
                rule: instance.rule,
                expected: instance.premises.len(),
                found: children.len(),
            });
        }
        for (i, (child, premise)) in children.iter().zip(instance.premises.iter()).enumerate() {
            if child.root() != premise {
                return Err(RuleError::SchemaMismatch {
                    rule: instance.rule,
                    detail: format!(
                        "child {} proves `{}`, but the premise requires `{}`",
                        i + 1,
                        child.root(),
                        premise
                    ),
                });
            }
        }
        Ok(ProofTree { instance, children })
    }

    /// The sequent this tree proves.
    pub fn root(&self) -> &Sequent {
        &self.instance.conclusion
    }

    /// The number of nodes in the tree.
    pub fn size(&self) -> usize {
        1 + self.children.iter().map(ProofTree::size).sum::<usize>()
    }
}
