//! Three-valued truth values with the truth and precision orders.

use std::fmt;

/// A truth value of three-valued logic. The derived order is the truth
/// order: `F < U < T`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TruthValue {
    /// False.
    F,
    /// Unknown.
    U,
    /// True.
    T,
}

impl TruthValue {
    /// The strong-negation inverse: swaps `T` and `F`, fixes `U`.
    pub fn inverse(self) -> TruthValue {
        match self {
            TruthValue::T => TruthValue::F,
            TruthValue::F => TruthValue::T,
            TruthValue::U => TruthValue::U,
        }
    }

    /// Conjunction: minimum in the truth order.
    pub fn and3(self, other: TruthValue) -> TruthValue {
        self.min(other)
    }

    /// Disjunction: maximum in the truth order.
    pub fn or3(self, other: TruthValue) -> TruthValue {
        self.max(other)
    }

    /// The precision order: `U` is below both `T` and `F`, which are
    /// incomparable to each other.
    pub fn leq_precision(self, other: TruthValue) -> bool {
        self == TruthValue::U || self == other
    }

    /// True if the value is `T` or `F`.
    pub fn is_two_valued(self) -> bool {
        self != TruthValue::U
    }
}

impl From<bool> for TruthValue {
    fn from(b: bool) -> TruthValue {
        if b {
            TruthValue::T
        } else {
            TruthValue::F
        }
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TruthValue::T => "T",
            TruthValue::F => "F",
            TruthValue::U => "U",
        };
        f.write_str(s)
    }
}
