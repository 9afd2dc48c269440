//! Canonical printers. Everything these emit re-parses to an equal value.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::calculus::ProofTree;
use crate::syntax::{Atom, Formula, Sequent};

/// Renders a formula in canonical concrete syntax.
pub fn print_formula(f: &Formula) -> String {
    f.to_string()
}

/// Renders a sequent in canonical concrete syntax.
pub fn print_sequent(s: &Sequent) -> String {
    s.to_string()
}

/// Renders a theory, one statement per line. Definitions appear bare;
/// every other statement ends with a period.
pub fn print_theory(statements: &[Formula]) -> String {
    let mut out = String::new();
    for f in statements {
        match f {
            Formula::Def(_) => {
                let _ = writeln!(out, "{f}");
            }
            _ => {
                let _ = writeln!(out, "{f}.");
            }
        }
    }
    out
}

/// Renders a proof tree in the proof file format.
pub fn print_proof(proof: &ProofTree) -> String {
    let mut out = String::new();
    write_node(&mut out, proof, 0);
    out
}

fn write_node(out: &mut String, node: &ProofTree, depth: usize) {
    let pad = "  ".repeat(depth);
    let inner = "  ".repeat(depth + 1);
    let inst = &node.instance;
    let _ = writeln!(out, "{pad}{{");
    let _ = writeln!(out, "{inner}rule: {}", inst.rule);
    let _ = writeln!(out, "{inner}sequent: \"{}\"", inst.conclusion);
    if let Some(f) = &inst.params.formula {
        let _ = writeln!(out, "{inner}formula: \"{f}\"");
    }
    if let Some(a) = &inst.params.atom {
        let _ = writeln!(out, "{inner}atom: {a}");
    }
    if let Some(set) = &inst.params.uset {
        let _ = writeln!(out, "{inner}uset: {}", atom_set(set));
    }
    if let Some(set) = &inst.params.vset {
        let _ = writeln!(out, "{inner}vset: {}", atom_set(set));
    }
    if let Some(f) = &inst.params.cutformula {
        let _ = writeln!(out, "{inner}cutformula: \"{f}\"");
    }
    if !node.children.is_empty() {
        let _ = writeln!(out, "{inner}premises {{");
        for child in &node.children {
            write_node(out, child, depth + 2);
        }
        let _ = writeln!(out, "{inner}}}");
    }
    let _ = writeln!(out, "{pad}}}");
}

fn atom_set(set: &BTreeSet<Atom>) -> String {
    let names: Vec<String> = set.iter().map(ToString::to_string).collect();
    format!("{{ {} }}", names.join(", "))
}
