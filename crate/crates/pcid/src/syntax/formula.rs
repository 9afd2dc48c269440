//! Formulas of propositional logic extended with inductive definitions.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::Error;
use crate::syntax::{Atom, Definition};

/// A formula: classical propositional structure plus definitions as
/// first-class subformulas. Implication and equivalence are surface syntax
/// only and are desugared by [`Formula::implies`] and [`Formula::iff`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    /// The constant true formula.
    True,
    /// The constant false formula.
    False,
    /// A propositional atom.
    Atom(Atom),
    /// Negation.
    Not(Box<Formula>),
    /// Conjunction.
    And(Box<Formula>, Box<Formula>),
    /// Disjunction.
    Or(Box<Formula>, Box<Formula>),
    /// An inductive definition used as a formula.
    Def(Definition),
}

/// How an atom occurs in a formula, classified by the parity of enclosing
/// negations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Polarity {
    /// The atom does not occur.
    Absent,
    /// Every occurrence is under an even number of negations.
    PositiveOnly,
    /// Every occurrence is under an odd number of negations.
    NegativeOnly,
    /// The atom occurs both positively and negatively.
    Both,
}

impl Formula {
    /// Atom as a formula.
    pub fn atom(a: Atom) -> Formula {
        Formula::Atom(a)
    }

    /// Negation.
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    /// Conjunction.
    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    /// Disjunction.
    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    /// Implication, desugared to `~a | b`.
    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::or(Formula::not(a), b)
    }

    /// Equivalence, desugared to `(a & b) | (~a & ~b)`.
    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::or(
            Formula::and(a.clone(), b.clone()),
            Formula::and(Formula::not(a), Formula::not(b)),
        )
    }

    /// Left-associated conjunction of `items`; the empty conjunction is `true`.
    pub fn conj_all(items: impl IntoIterator<Item = Formula>) -> Formula {
        let mut iter = items.into_iter();
        match iter.next() {
            None => Formula::True,
            Some(first) => iter.fold(first, Formula::and),
        }
    }

    /// Every atom occurring in the formula, including the atoms of any
    /// definition subformulas (both defined and open).
    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<Atom>) {
        match self {
            Formula::True | Formula::False => {}
            Formula::Atom(a) => {
                out.insert(a.clone());
            }
            Formula::Not(f) => f.collect_atoms(out),
            Formula::And(a, b) | Formula::Or(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
            Formula::Def(d) => out.extend(d.vocab()),
        }
    }

    /// True if the formula contains no definition subformula.
    pub fn is_pc(&self) -> bool {
        match self {
            Formula::True | Formula::False | Formula::Atom(_) => true,
            Formula::Not(f) => f.is_pc(),
            Formula::And(a, b) | Formula::Or(a, b) => a.is_pc() && b.is_pc(),
            Formula::Def(_) => false,
        }
    }

    /// The polarity of `atom` in this formula, determined by the parity of
    /// enclosing negations. Occurrences inside a definition subformula have
    /// no polarity; asking about such an atom is an error.
    pub fn polarity(&self, atom: &Atom) -> Result<Polarity, Error> {
        let mut pos = false;
        let mut neg = false;
        self.polarity_walk(atom, true, &mut pos, &mut neg)?;
        Ok(match (pos, neg) {
            (false, false) => Polarity::Absent,
            (true, false) => Polarity::PositiveOnly,
            (false, true) => Polarity::NegativeOnly,
            (true, true) => Polarity::Both,
        })
    }

    fn polarity_walk(
        &self,
        atom: &Atom,
        positive: bool,
        pos: &mut bool,
        neg: &mut bool,
    ) -> Result<(), Error> {
        match self {
            Formula::True | Formula::False => Ok(()),
            Formula::Atom(a) => {
                if a == atom {
                    if positive {
                        *pos = true;
                    } else {
                        *neg = true;
                    }
                }
                Ok(())
            }
            Formula::Not(f) => f.polarity_walk(atom, !positive, pos, neg),
            Formula::And(a, b) | Formula::Or(a, b) => {
                a.polarity_walk(atom, positive, pos, neg)?;
                b.polarity_walk(atom, positive, pos, neg)
            }
            Formula::Def(d) => {
                if d.vocab().contains(atom) {
                    Err(Error::PolarityUnderDefinition {
                        atom: atom.name().to_string(),
                    })
                } else {
                    Ok(())
                }
            }
        }
    }

    /// All definition subformulas together with the parity of their position
    /// (`true` for an even number of enclosing negations). A definition may
    /// be reported several times, once per occurrence.
    pub fn definition_occurrences(&self) -> Vec<(&Definition, bool)> {
        let mut out = Vec::new();
        self.defs_walk(true, &mut out);
        out
    }

    fn defs_walk<'a>(&'a self, positive: bool, out: &mut Vec<(&'a Definition, bool)>) {
        match self {
            Formula::True | Formula::False | Formula::Atom(_) => {}
            Formula::Not(f) => f.defs_walk(!positive, out),
            Formula::And(a, b) | Formula::Or(a, b) => {
                a.defs_walk(positive, out);
                b.defs_walk(positive, out);
            }
            Formula::Def(d) => out.push((d, positive)),
        }
    }

    /// Renames every positive occurrence of an atom in `targets` to its
    /// `__r` form. Defined for definition-free formulas; definition
    /// subformulas are left untouched.
    pub fn rename_pos(&self, targets: &BTreeSet<Atom>) -> Formula {
        self.rename_walk(targets, true, RenameMode::PosOnly)
    }

    /// Renames every positive occurrence of an atom in `targets` to its
    /// `__r` form and every negative occurrence to its `__d` form. Defined
    /// for definition-free formulas; definition subformulas are left
    /// untouched.
    pub fn rename_diamond(&self, targets: &BTreeSet<Atom>) -> Formula {
        self.rename_walk(targets, true, RenameMode::PosAndNeg)
    }

    fn rename_walk(&self, targets: &BTreeSet<Atom>, positive: bool, mode: RenameMode) -> Formula {
        match self {
            Formula::True | Formula::False => self.clone(),
            Formula::Atom(a) => {
                if targets.contains(a) {
                    if positive {
                        Formula::Atom(a.renamed_pos())
                    } else {
                        match mode {
                            RenameMode::PosOnly => self.clone(),
                            RenameMode::PosAndNeg => Formula::Atom(a.renamed_neg()),
                        }
                    }
                } else {
                    self.clone()
                }
            }
            Formula::Not(f) => Formula::not(f.rename_walk(targets, !positive, mode)),
            Formula::And(a, b) => Formula::and(
                a.rename_walk(targets, positive, mode),
                b.rename_walk(targets, positive, mode),
            ),
            Formula::Or(a, b) => Formula::or(
                a.rename_walk(targets, positive, mode),
                b.rename_walk(targets, positive, mode),
            ),
            Formula::Def(_) => self.clone(),
        }
    }

    /// Renames every occurrence (any polarity) of an atom in `targets` to its
    /// primed form. Defined for definition-free formulas; definition
    /// subformulas are left untouched.
    pub fn prime_atoms(&self, targets: &BTreeSet<Atom>) -> Formula {
        match self {
            Formula::True | Formula::False => self.clone(),
            Formula::Atom(a) => {
                if targets.contains(a) {
                    Formula::Atom(a.primed())
                } else {
                    self.clone()
                }
            }
            Formula::Not(f) => Formula::not(f.prime_atoms(targets)),
            Formula::And(a, b) => {
                Formula::and(a.prime_atoms(targets), b.prime_atoms(targets))
            }
            Formula::Or(a, b) => Formula::or(a.prime_atoms(targets), b.prime_atoms(targets)),
            Formula::Def(_) => self.clone(),
        }
    }
}

#[derive(Clone, Copy)]
enum RenameMode {
    PosOnly,
    PosAndNeg,
}

/// Precedence levels for printing: disjunction binds loosest, then
/// conjunction; negation and the leaf forms are primary.
const PREC_OR: u8 = 1;
const PREC_AND: u8 = 2;
const PREC_PRIMARY: u8 = 3;

impl Formula {
    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min_prec: u8) -> fmt::Result {
        match self {
            Formula::True => f.write_str("true"),
            Formula::False => f.write_str("false"),
            Formula::Atom(a) => write!(f, "{a}"),
            Formula::Not(inner) => {
                f.write_str("~")?;
                inner.fmt_prec(f, PREC_PRIMARY)
            }
            Formula::And(a, b) => {
                let parens = min_prec > PREC_AND;
                if parens {
                    f.write_str("(")?;
                }
                a.fmt_prec(f, PREC_AND)?;
                f.write_str(" & ")?;
                b.fmt_prec(f, PREC_AND + 1)?;
                if parens {
                    f.write_str(")")?;
                }
                Ok(())
            }
            Formula::Or(a, b) => {
                let parens = min_prec > PREC_OR;
                if parens {
                    f.write_str("(")?;
                }
                a.fmt_prec(f, PREC_OR)?;
                f.write_str(" | ")?;
                b.fmt_prec(f, PREC_OR + 1)?;
                if parens {
                    f.write_str(")")?;
                }
                Ok(())
            }
            Formula::Def(d) => write!(f, "{d}"),
        }
    }
}

/// Canonical concrete syntax. Binary connectives print left-associated
/// with minimal parentheses, so printing and parsing are mutually inverse.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, PREC_OR)
    }
}
