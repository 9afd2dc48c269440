//! The proof checker: structural validation of whole proof trees, and
//! optional discharge of the totality obligations left by `def-intro`.

use std::collections::BTreeSet;
use std::fmt;

use crate::calculus::{ProofTree, RuleError, RuleName};
use crate::error::Error;
use crate::semantics::{is_total, Bounds, Totality};
use crate::syntax::{Definition, Formula, Sequent};

/// Where and why a proof failed to check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckFailure {
    /// Path from the root, e.g. `root.1.2` (child indices are 1-based).
    pub path: String,
    pub error: RuleError,
}

impl fmt::Display for CheckFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at {}: {}", self.path, self.error)
    }
}

/// The result of checking a proof tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    /// True if every node is a valid rule instance and every child proves
    /// its premise.
    pub accepted: bool,
    /// The sequent the proof claims to prove.
    pub root: Sequent,
    /// True if the proof uses `def-intro` anywhere.
    pub uses_def_intro: bool,
    /// The definitions introduced by `def-intro`, in first-use order,
    /// without duplicates. Each carries a totality obligation.
    pub introduced_definitions: Vec<Definition>,
    /// The first failure found, if any.
    pub failure: Option<CheckFailure>,
}

/// Checks a proof tree bottom to top: every node must be a valid instance
/// of its rule, and every child must prove the corresponding premise.
/// Totality obligations of `def-intro` are collected, not discharged; see
/// [`discharge_totality`].
pub fn check_proof(tree: &ProofTree) -> CheckReport {
    let mut report = CheckReport {
        accepted: true,
        root: tree.root().clone(),
        uses_def_intro: false,
        introduced_definitions: Vec::new(),
        failure: None,
    };
    let mut seen: BTreeSet<Definition> = BTreeSet::new();
    walk(tree, "root", &mut report, &mut seen);
    report.accepted = report.failure.is_none();
    report
}

fn walk(
    node: &ProofTree,
    path: &str,
    report: &mut CheckReport,
    seen: &mut BTreeSet<Definition>,
) {
    if report.failure.is_some() {
        return;
    }
    if let Err(error) = node.instance.validate() {
        report.failure = Some(CheckFailure {
            path: path.to_string(),
            error,
        });
        return;
    }
    if node.instance.rule == RuleName::DefIntro {
        report.uses_def_intro = true;
        if let Some(Formula::Def(d)) = &node.instance.params.formula {
            if seen.insert(d.clone()) {
                report.introduced_definitions.push(d.clone());
            }
        }
    }
    if node.children.len() != node.instance.premises.len() {
        report.failure = Some(CheckFailure {
            path: path.to_string(),
            error: RuleError::Arity {
                rule: node.instance.rule,
                expected: node.instance.premises.len(),
                found: node.children.len(),
            },
        });
        return;
    }
    for (i, (child, premise)) in node
        .children
        .iter()
        .zip(node.instance.premises.iter())
        .enumerate()
    {
        if child.root() != premise {
            report.failure = Some(CheckFailure {
                path: path.to_string(),
                error: RuleError::SchemaMismatch {
                    rule: node.instance.rule,
                    detail: format!(
                        "child {} proves `{}`, but the premise requires `{}`",
                        i + 1,
                        child.root(),
                        premise
                    ),
                },
            });
            return;
        }
        let child_path = format!("{}.{}", path, i + 1);
        walk(child, &child_path, report, seen);
        if report.failure.is_some() {
            return;
        }
    }
}

/// Discharges the totality obligations of an accepted proof: each
/// introduced definition must be total with respect to the root sequent's
/// antecedent, read as a theory.
pub fn discharge_totality(
    report: &CheckReport,
    bounds: &Bounds,
) -> Result<Vec<(Definition, Totality)>, Error> {
    let theory: Vec<Formula> = report.root.antecedent.iter().cloned().collect();
    report
        .introduced_definitions
        .iter()
        .map(|d| Ok((d.clone(), is_total(d, &theory, bounds)?)))
        .collect()
}
