//! Interpretations: finite assignments of truth values to atoms.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::Error;
use crate::semantics::TruthValue;
use crate::syntax::Atom;

/// A vocabulary: a finite set of atoms closed under taking the base of a
/// generated atom (if `q__r` is in the vocabulary, so is `q`).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Vocabulary(BTreeSet<Atom>);

impl Vocabulary {
    /// Builds a vocabulary from the given atoms, adding every base of a
    /// generated atom to close the set.
    pub fn closure(atoms: impl IntoIterator<Item = Atom>) -> Vocabulary {
        let mut set = BTreeSet::new();
        for atom in atoms {
            let mut cur = atom;
            loop {
                let base = cur.base();
                set.insert(cur);
                match base {
                    Some(b) => cur = b,
                    None => break,
                }
            }
        }
        Vocabulary(set)
    }

    /// The atoms of the vocabulary, in ascending order.
    pub fn atoms(&self) -> impl Iterator<Item = &Atom> {
        self.0.iter()
    }

    /// Membership test.
    pub fn contains(&self, atom: &Atom) -> bool {
        self.0.contains(atom)
    }

    /// Number of atoms.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True if the vocabulary is empty.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The underlying set.
    pub fn as_set(&self) -> &BTreeSet<Atom> {
        &self.0
    }
}

/// A three-valued interpretation: a finite map from atoms to truth values.
/// The domain is explicit; evaluating an atom outside the domain is an
/// error, not a default.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Interpretation {
    map: BTreeMap<Atom, TruthValue>,
}

impl Interpretation {
    /// The empty interpretation.
    pub fn empty() -> Interpretation {
        Interpretation::default()
    }

    /// Builds an interpretation from explicit pairs.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Atom, TruthValue)>) -> Interpretation {
        Interpretation {
            map: pairs.into_iter().collect(),
        }
    }

    /// The value of `atom`, if assigned.
    pub fn get(&self, atom: &Atom) -> Option<TruthValue> {
        self.map.get(atom).copied()
    }

    /// The value of `atom`, or an error if the interpretation does not
    /// assign it.
    pub fn value(&self, atom: &Atom) -> Result<TruthValue, Error> {
        self.get(atom).ok_or_else(|| Error::UnknownAtom {
            atom: atom.name().to_string(),
        })
    }

    /// Sets the value of one atom (adding it to the domain if absent).
    pub fn set(&mut self, atom: Atom, value: TruthValue) {
        self.map.insert(atom, value);
    }

    /// A copy with one atom revalued.
    pub fn assign(&self, atom: Atom, value: TruthValue) -> Interpretation {
        let mut i = self.clone();
        i.set(atom, value);
        i
    }

    /// A copy with every atom of `atoms` revalued to `value`.
    pub fn assign_all(&self, atoms: &BTreeSet<Atom>, value: TruthValue) -> Interpretation {
        let mut i = self.clone();
        for a in atoms {
            i.set(a.clone(), value);
        }
        i
    }

    /// The union of two interpretations with disjoint domains.
    pub fn disjoint_union(&self, other: &Interpretation) -> Result<Interpretation, Error> {
        let mut map = self.map.clone();
        for (a, v) in &other.map {
            if map.insert(a.clone(), *v).is_some() {
                return Err(Error::contract(
                    "Interpretation::disjoint_union",
                    format!("domains overlap at `{a}`"),
                ));
            }
        }
        Ok(Interpretation { map })
    }

    /// The restriction of the interpretation to the atoms in `atoms`.
    pub fn restrict(&self, atoms: &BTreeSet<Atom>) -> Interpretation {
        Interpretation {
            map: self
                .map
                .iter()
                .filter(|(a, _)| atoms.contains(*a))
                .map(|(a, v)| (a.clone(), *v))
                .collect(),
        }
    }

    /// The domain of the interpretation.
    pub fn domain(&self) -> BTreeSet<Atom> {
        self.map.keys().cloned().collect()
    }

    /// Iterates over the assignments in ascending atom order.
    pub fn iter(&self) -> impl Iterator<Item = (&Atom, TruthValue)> {
        self.map.iter().map(|(a, v)| (a, *v))
    }

    /// Number of assigned atoms.
    pub fn len(&self) -> usize {
        self.map.len()
    }

    /// True if the domain is empty.
    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// True if no atom is assigned `U`.
    pub fn is_two_valued(&self) -> bool {
        self.map.values().all(|v| v.is_two_valued())
    }

    /// The precision order, pointwise over a shared domain. Returns an
    /// error if the domains differ.
    pub fn leq_precision(&self, other: &Interpretation) -> Result<bool, Error> {
        self.same_domain(other, "Interpretation::leq_precision")?;
        Ok(self
            .map
            .iter()
            .all(|(a, v)| v.leq_precision(other.map[a])))
    }

    /// The truth order, pointwise over a shared domain. Returns an error if
    /// the domains differ.
    pub fn leq_truth(&self, other: &Interpretation) -> Result<bool, Error> {
        self.same_domain(other, "Interpretation::leq_truth")?;
        Ok(self.map.iter().all(|(a, v)| *v <= other.map[a]))
    }

    fn same_domain(&self, other: &Interpretation, operation: &'static str) -> Result<(), Error> {
        if self.map.len() != other.map.len()
            || !self.map.keys().eq(other.map.keys())
        {
            return Err(Error::contract(operation, "domains differ"));
        }
        Ok(())
    }
}

impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (a, v) in self.iter() {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{a}={v}")?;
            first = false;
        }
        Ok(())
    }
}
