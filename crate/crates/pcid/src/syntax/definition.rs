//! Inductive definitions: finite sets of rules, one body per defined atom.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::Error;
use crate::syntax::{Atom, Formula, Polarity};

/// An inductive definition in normalized form: a finite map from defined
/// atoms to definition-free rule bodies. Several input rules with the same
/// head are merged into one rule whose body is their disjunction.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Definition {
    rules: BTreeMap<Atom, Formula>,
}

impl Definition {
    /// Normalizes a list of rules `(head, body)` into a definition. Rules
    /// with equal heads are merged by disjunction, left to right in input
    /// order. Bodies must be definition-free.
    pub fn normalize(rules: Vec<(Atom, Formula)>) -> Result<Definition, Error> {
        let mut merged: BTreeMap<Atom, Formula> = BTreeMap::new();
        for (head, body) in rules {
            if !body.is_pc() {
                return Err(Error::MalformedDefinition {
                    head: head.name().to_string(),
                });
            }
            match merged.remove(&head) {
                None => {
                    merged.insert(head, body);
                }
                Some(prev) => {
                    merged.insert(head, Formula::or(prev, body));
                }
            }
        }
        Ok(Definition { rules: merged })
    }

    /// The defined atoms (rule heads).
    pub fn defined(&self) -> BTreeSet<Atom> {
        self.rules.keys().cloned().collect()
    }

    /// The open atoms: atoms occurring in some rule body that are not
    /// defined by the definition.
    pub fn open(&self) -> BTreeSet<Atom> {
        let defined = self.defined();
        let mut open = BTreeSet::new();
        for body in self.rules.values() {
            for a in body.atoms() {
                if !defined.contains(&a) {
                    open.insert(a);
                }
            }
        }
        open
    }

    /// All atoms of the definition: defined and open together.
    pub fn vocab(&self) -> BTreeSet<Atom> {
        let mut v = self.defined();
        v.extend(self.open());
        v
    }

    /// The rule body for `head`, if `head` is defined.
    pub fn body(&self, head: &Atom) -> Option<&Formula> {
        self.rules.get(head)
    }

    /// Iterates over the rules in ascending head order.
    pub fn rules(&self) -> impl Iterator<Item = (&Atom, &Formula)> {
        self.rules.iter()
    }

    /// The number of rules.
    pub fn len(&self) -> usize {
        self.rules.len()
    }

    /// True if the definition has no rules.
    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// The dependency relation as a set of pairs `(q, p)` meaning `q ≺ p`:
    /// the rule for `p` mentions `q`, directly or through other defined
    /// atoms.
    pub fn deps(&self) -> BTreeSet<(Atom, Atom)> {
        let mut pairs: BTreeSet<(Atom, Atom)> = BTreeSet::new();
        for (head, body) in &self.rules {
            for q in body.atoms() {
                pairs.insert((q, head.clone()));
            }
        }
        let atoms: Vec<Atom> = self.vocab().into_iter().collect();
        for mid in &atoms {
            for a in &atoms {
                if !pairs.contains(&(a.clone(), mid.clone())) {
                    continue;
                }
                for b in &atoms {
                    if pairs.contains(&(mid.clone(), b.clone())) {
                        pairs.insert((a.clone(), b.clone()));
                    }
                }
            }
        }
        pairs
    }

    /// True if no rule body has a negative occurrence of some atom `q` with
    /// `head ≺ q`: no defined atom depends negatively on itself, directly or
    /// through a cycle.
    pub fn is_stratified(&self) -> bool {
        let deps = self.deps();
        for (head, body) in &self.rules {
            for q in body.atoms() {
                let polarity = body
                    .polarity(&q)
                    .expect("rule bodies are definition-free");
                let negative =
                    matches!(polarity, Polarity::NegativeOnly | Polarity::Both);
                if negative && deps.contains(&(head.clone(), q.clone())) {
                    return false;
                }
            }
        }
        true
    }

    /// The positive-occurrence variant used by the non-totality rule: keeps
    /// only the rules for atoms in `targets`, renames their heads to the
    /// `__r` form, and renames occurrences of `targets` in the bodies (`__r`
    /// positive, `__d` negative). The result defines only positive rules and
    /// is therefore total.
    pub fn diamond(&self, targets: &BTreeSet<Atom>) -> Definition {
        let rules = self
            .rules
            .iter()
            .filter(|(head, _)| targets.contains(head))
            .map(|(head, body)| (head.renamed_pos(), body.rename_diamond(targets)))
            .collect();
        Definition { rules }
    }

    /// The primed copy of the definition: every defined atom is renamed to
    /// its primed form, in heads and bodies alike. Open atoms are kept.
    pub fn primed(&self) -> Definition {
        let defined = self.defined();
        let rules = self
            .rules
            .iter()
            .map(|(head, body)| (head.primed(), body.prime_atoms(&defined)))
            .collect();
        Definition { rules }
    }
}

/// Canonical concrete syntax: rules in ascending head order, each ending
/// in a period, inside braces.
impl fmt::Display for Definition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rules.is_empty() {
            return f.write_str("{ }");
        }
        f.write_str("{")?;
        for (head, body) in &self.rules {
            write!(f, " {head} <- {body}.")?;
        }
        f.write_str(" }")
    }
}
