//! Sequents over sets of formulas.

use std::collections::BTreeSet;
use std::fmt;

use crate::syntax::{Atom, Formula};

/// A sequent `Γ ⟶ Δ` with both sides read as sets: the antecedent is a
/// conjunction, the succedent a disjunction. Either side may be empty (the
/// empty antecedent is true, the empty succedent false).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Sequent {
    pub antecedent: BTreeSet<Formula>,
    pub succedent: BTreeSet<Formula>,
}

impl Sequent {
    /// Builds a sequent from the two sides.
    pub fn new(
        antecedent: impl IntoIterator<Item = Formula>,
        succedent: impl IntoIterator<Item = Formula>,
    ) -> Sequent {
        Sequent {
            antecedent: antecedent.into_iter().collect(),
            succedent: succedent.into_iter().collect(),
        }
    }

    /// Every atom occurring in the sequent, on either side.
    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        for f in self.antecedent.iter().chain(self.succedent.iter()) {
            out.extend(f.atoms());
        }
        out
    }

    /// The sequent with `f` added to the antecedent.
    pub fn with_left(&self, f: Formula) -> Sequent {
        let mut s = self.clone();
        s.antecedent.insert(f);
        s
    }

    /// The sequent with `f` added to the succedent.
    pub fn with_right(&self, f: Formula) -> Sequent {
        let mut s = self.clone();
        s.succedent.insert(f);
        s
    }

    /// The sequent with `f` removed from the antecedent.
    pub fn without_left(&self, f: &Formula) -> Sequent {
        let mut s = self.clone();
        s.antecedent.remove(f);
        s
    }

    /// The sequent with `f` removed from the succedent.
    pub fn without_right(&self, f: &Formula) -> Sequent {
        let mut s = self.clone();
        s.succedent.remove(f);
        s
    }

    /// True if some formula occurs on both sides, or the antecedent contains
    /// `false`, or the succedent contains `true`: the sequent is an axiom.
    pub fn is_axiom(&self) -> bool {
        self.antecedent.contains(&Formula::False)
            || self.succedent.contains(&Formula::True)
            || self.antecedent.intersection(&self.succedent).next().is_some()
    }
}

fn write_side(f: &mut fmt::Formatter<'_>, side: &BTreeSet<Formula>) -> fmt::Result {
    let mut texts: Vec<String> = side.iter().map(|x| x.to_string()).collect();
    texts.sort();
    f.write_str(&texts.join(", "))
}

/// Canonical concrete syntax: each side lists its formulas in ascending
/// order of their canonical text, around the turnstile `|-`.
impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.antecedent.is_empty() {
            write_side(f, &self.antecedent)?;
            f.write_str(" ")?;
        }
        f.write_str("|-")?;
        if !self.succedent.is_empty() {
            f.write_str(" ")?;
            write_side(f, &self.succedent)?;
        }
        Ok(())
    }
}
