//! Enumeration-based decision procedures: validity, satisfiability, and
//! totality over bounded vocabularies.

use std::collections::BTreeSet;

use crate::error::Error;
use crate::semantics::{truth, wf_model, Interpretation, TruthValue, Vocabulary};
use crate::syntax::{Atom, Definition, Formula, Sequent};

/// Resource bounds for the enumeration oracles and the prover.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Maximum vocabulary size the truth-table oracles will enumerate.
    pub max_enum_atoms: usize,
    /// Maximum number of atoms in a sequent handed to the prover.
    pub max_prover_atoms: usize,
    /// Maximum number of case-split extensions the prover will merge.
    pub max_extensions: usize,
}

impl Default for Bounds {
    fn default() -> Bounds {
        Bounds {
            max_enum_atoms: 22,
            max_prover_atoms: 16,
            max_extensions: 1 << 16,
        }
    }
}

/// The outcome of a validity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Validity {
    Valid,
    /// The first counter-model in enumeration order (atoms ascending,
    /// false before true).
    CounterModel(Interpretation),
}

/// The outcome of a satisfiability check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Sat {
    /// The first model in enumeration order.
    Model(Interpretation),
    Unsat,
}

/// The outcome of a totality check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Totality {
    Total,
    /// The first model of the theory whose well-founded limit is not
    /// two-valued.
    Witness(Interpretation),
}

/// Iterates over all two-valued interpretations of a fixed atom list, in
/// lexicographic order: the first atom varies slowest, and false precedes
/// true.
pub struct InterpretationEnumeration {
    atoms: Vec<Atom>,
    next: Option<u64>,
    end: u64,
}

impl InterpretationEnumeration {
    /// Builds the enumerator, rejecting vocabularies larger than `max_atoms`.
    pub fn new(vocab: &Vocabulary, max_atoms: usize) -> Result<Self, Error> {
        let atoms: Vec<Atom> = vocab.atoms().cloned().collect();
        if atoms.len() > max_atoms.min(62) {
            return Err(Error::ResourceLimit {
                what: "vocabulary",
                size: atoms.len(),
                bound: max_atoms.min(62),
            });
        }
        let end = 1u64 << atoms.len();
        Ok(InterpretationEnumeration {
            atoms,
            next: Some(0),
            end,
        })
    }
}

impl Iterator for InterpretationEnumeration {
    type Item = Interpretation;

    fn next(&mut self) -> Option<Interpretation> {
        let k = self.next?;
        if k >= self.end {
            self.next = None;
            return None;
        }
        self.next = Some(k + 1);
        let n = self.atoms.len();
        let interp = Interpretation::from_pairs(self.atoms.iter().enumerate().map(|(j, a)| {
            let bit = (k >> (n - 1 - j)) & 1;
            (a.clone(), TruthValue::from(bit == 1))
        }));
        Some(interp)
    }
}

/// Decides validity of a sequent by enumerating all two-valued
/// interpretations of its vocabulary. Invalid sequents yield the first
/// counter-model in enumeration order.
pub fn is_valid(s: &Sequent, bounds: &Bounds) -> Result<Validity, Error> {
    let vocab = Vocabulary::closure(s.atoms());
    for i in InterpretationEnumeration::new(&vocab, bounds.max_enum_atoms)? {
        let all_antecedent = all_true(s.antecedent.iter(), &i)?;
        if !all_antecedent {
            continue;
        }
        let mut some_succedent = false;
        for f in &s.succedent {
            if truth(f, &i)? == TruthValue::T {
                some_succedent = true;
                break;
            }
        }
        if !some_succedent {
            return Ok(Validity::CounterModel(i));
        }
    }
    Ok(Validity::Valid)
}

/// Decides satisfiability of a finite theory by enumeration, yielding the
/// first model in enumeration order.
pub fn satisfiable(theory: &[Formula], bounds: &Bounds) -> Result<Sat, Error> {
    let vocab = Vocabulary::closure(theory.iter().flat_map(|f| f.atoms()));
    for i in InterpretationEnumeration::new(&vocab, bounds.max_enum_atoms)? {
        if all_true(theory.iter(), &i)? {
            return Ok(Sat::Model(i));
        }
    }
    Ok(Sat::Unsat)
}

/// Decides whether `d` is total with respect to `theory`: for every model
/// of the theory (over the theory's atoms together with the open atoms of
/// `d`), the well-founded limit from the model's open part is two-valued.
/// The empty theory gives absolute totality.
pub fn is_total(
    d: &Definition,
    theory: &[Formula],
    bounds: &Bounds,
) -> Result<Totality, Error> {
    let mut atoms: BTreeSet<Atom> = theory.iter().flat_map(|f| f.atoms()).collect();
    atoms.extend(d.open());
    let vocab = Vocabulary::closure(atoms);
    for m in InterpretationEnumeration::new(&vocab, bounds.max_enum_atoms)? {
        if !all_true(theory.iter(), &m)? {
            continue;
        }
        let limit = wf_model(d, &m.restrict(&d.open()))?;
        if !limit.is_two_valued() {
            return Ok(Totality::Witness(m));
        }
    }
    Ok(Totality::Total)
}

fn all_true<'a>(
    formulas: impl Iterator<Item = &'a Formula>,
    i: &Interpretation,
) -> Result<bool, Error> {
    for f in formulas {
        if truth(f, i)? != TruthValue::T {
            return Ok(false);
        }
    }
    Ok(true)
}
