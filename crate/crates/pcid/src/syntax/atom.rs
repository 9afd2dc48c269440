//! Propositional atoms, including the generated atoms used by the definition rules.

use std::fmt;
use std::sync::Arc;

use crate::error::Error;

/// Reserved suffix marking a positive-occurrence renaming of an atom.
pub const SUFFIX_RENAMED_POS: &str = "__r";
/// Reserved suffix marking a negative-occurrence renaming of an atom.
pub const SUFFIX_RENAMED_NEG: &str = "__d";
/// Reserved suffix marking a primed copy of an atom.
pub const SUFFIX_PRIMED: &str = "__p";

/// How an atom came to be: written by the user, or generated by one of the
/// three renaming constructions used by the definition rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AtomKind {
    /// A plain atom written by the user.
    User,
    /// A positive-occurrence renaming (suffix `__r`).
    RenamedPos,
    /// A negative-occurrence renaming (suffix `__d`).
    RenamedNeg,
    /// A primed copy (suffix `__p`).
    Primed,
}

/// A propositional atom.
///
/// User atoms match `[a-z][a-zA-Z0-9_]*` and never contain two consecutive
/// underscores; the names `true` and `false` are also excluded. Generated
/// atoms append one of the reserved suffixes `__r`, `__d`, or `__p` to a base
/// atom, and suffixes may be chained (for example `q__r__r`). Because user
/// names cannot contain `__`, every name decomposes uniquely into a user base
/// followed by a chain of suffixes.
///
/// Atoms are ordered and compared by name, and cloning is cheap.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom {
    name: Arc<str>,
}

impl Atom {
    /// Creates a user atom, rejecting names that are not valid user identifiers.
    pub fn user(name: &str) -> Result<Atom, Error> {
        validate_user_name(name)?;
        Ok(Atom { name: name.into() })
    }

    /// Parses an atom name that may carry renaming suffixes, validating that
    /// it decomposes into a valid user base followed by reserved suffixes.
    pub fn parse(name: &str) -> Result<Atom, Error> {
        let mut rest = name;
        loop {
            if let Some(base) = strip_one_suffix(rest) {
                rest = base;
            } else {
                break;
            }
        }
        validate_user_name(rest)?;
        Ok(Atom { name: name.into() })
    }

    /// The full name of the atom, including any renaming suffixes.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// The kind of the atom, determined by its final suffix (if any).
    pub fn kind(&self) -> AtomKind {
        if self.name.ends_with(SUFFIX_RENAMED_POS) {
            AtomKind::RenamedPos
        } else if self.name.ends_with(SUFFIX_RENAMED_NEG) {
            AtomKind::RenamedNeg
        } else if self.name.ends_with(SUFFIX_PRIMED) {
            AtomKind::Primed
        } else {
            AtomKind::User
        }
    }

    /// True if the atom carries no renaming suffix.
    pub fn is_user(&self) -> bool {
        self.kind() == AtomKind::User
    }

    /// The atom obtained by removing the final renaming suffix, or `None`
    /// for a user atom.
    pub fn base(&self) -> Option<Atom> {
        strip_one_suffix(&self.name).map(|base| Atom { name: base.into() })
    }

    /// The positive-occurrence renaming of this atom (suffix `__r`).
    pub fn renamed_pos(&self) -> Atom {
        Atom {
            name: format!("{}{}", self.name, SUFFIX_RENAMED_POS).into(),
        }
    }

    /// The negative-occurrence renaming of this atom (suffix `__d`).
    pub fn renamed_neg(&self) -> Atom {
        Atom {
            name: format!("{}{}", self.name, SUFFIX_RENAMED_NEG).into(),
        }
    }

    /// The primed copy of this atom (suffix `__p`).
    pub fn primed(&self) -> Atom {
        Atom {
            name: format!("{}{}", self.name, SUFFIX_PRIMED).into(),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Atom({})", self.name)
    }
}

/// Strips one reserved suffix from the end of `name`, if present.
fn strip_one_suffix(name: &str) -> Option<&str> {
    for suffix in [SUFFIX_RENAMED_POS, SUFFIX_RENAMED_NEG, SUFFIX_PRIMED] {
        if let Some(base) = name.strip_suffix(suffix) {
            if !base.is_empty() {
                return Some(base);
            }
        }
    }
    None
}

fn validate_user_name(name: &str) -> Result<(), Error> {
    let invalid = |reason: &str| Error::InvalidAtomName {
        name: name.to_string(),
        reason: reason.to_string(),
    };
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() => {}
        Some(_) => return Err(invalid("must start with a lowercase letter")),
        None => return Err(invalid("must be non-empty")),
    }
    if !chars.all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return Err(invalid(
            "may contain only ASCII letters, digits, and underscores",
        ));
    }
    if name.contains("__") {
        return Err(invalid(
            "double underscores are reserved for generated atoms",
        ));
    }
    if name == "true" || name == "false" {
        return Err(invalid("`true` and `false` are reserved keywords"));
    }
    Ok(())
}
