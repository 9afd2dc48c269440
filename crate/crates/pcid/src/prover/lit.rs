//! Literals: signed atoms, the currency of the completion procedures.

use std::collections::BTreeSet;

use crate::semantics::{Interpretation, TruthValue};
use crate::syntax::{Atom, Formula};

/// A signed atom. Ordered by atom, negative before positive.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct Lit {
    pub atom: Atom,
    pub positive: bool,
}

impl Lit {
    pub fn pos(atom: Atom) -> Lit {
        Lit {
            atom,
            positive: true,
        }
    }

    pub fn neg(atom: Atom) -> Lit {
        Lit {
            atom,
            positive: false,
        }
    }

    /// The literal as a formula: `a` or `~a`.
    pub fn formula(&self) -> Formula {
        let a = Formula::Atom(self.atom.clone());
        if self.positive {
            a
        } else {
            Formula::not(a)
        }
    }

    /// The complementary literal.
    pub fn complement(&self) -> Lit {
        Lit {
            atom: self.atom.clone(),
            positive: !self.positive,
        }
    }

    /// The literal's truth under an interpretation, if its atom is assigned.
    pub fn truth_in(&self, i: &Interpretation) -> Option<TruthValue> {
        let v = i.get(&self.atom)?;
        Some(if self.positive { v } else { v.inverse() })
    }
}

pub(crate) type LitSet = BTreeSet<Lit>;

/// The formulas of a literal set.
pub(crate) fn formulas(lits: &LitSet) -> impl Iterator<Item = Formula> + '_ {
    lits.iter().map(Lit::formula)
}

/// Reads a two-valued interpretation as a literal set.
pub(crate) fn from_interpretation(i: &Interpretation) -> LitSet {
    i.iter()
        .filter_map(|(a, v)| match v {
            TruthValue::T => Some(Lit::pos(a.clone())),
            TruthValue::F => Some(Lit::neg(a.clone())),
            TruthValue::U => None,
        })
        .collect()
}

/// Reads a literal set with exactly the given atoms as an interpretation.
pub(crate) fn to_interpretation(lits: &LitSet, atoms: &BTreeSet<Atom>) -> Interpretation {
    Interpretation::from_pairs(lits.iter().filter_map(|l| {
        if atoms.contains(&l.atom) {
            Some((l.atom.clone(), TruthValue::from(l.positive)))
        } else {
            None
        }
    }))
}
