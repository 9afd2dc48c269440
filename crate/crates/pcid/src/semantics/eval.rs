//! Formula evaluation: three-valued Kleene evaluation for definition-free
//! formulas, and two-valued evaluation for the full language.

use crate::error::Error;
use crate::semantics::{wf_model, Interpretation, TruthValue};
use crate::syntax::Formula;

/// Three-valued Kleene evaluation of a definition-free formula:
/// conjunction is minimum and disjunction maximum in the truth order,
/// negation is the inverse. The interpretation must assign every atom of
/// the formula.
pub fn eval3(formula: &Formula, i: &Interpretation) -> Result<TruthValue, Error> {
    match formula {
        Formula::True => Ok(TruthValue::T),
        Formula::False => Ok(TruthValue::F),
        Formula::Atom(a) => i.value(a),
        Formula::Not(f) => Ok(eval3(f, i)?.inverse()),
        Formula::And(a, b) => Ok(eval3(a, i)?.and3(eval3(b, i)?)),
        Formula::Or(a, b) => Ok(eval3(a, i)?.or3(eval3(b, i)?)),
        Formula::Def(_) => Err(Error::contract(
            "eval3",
            "three-valued evaluation is defined for definition-free formulas",
        )),
    }
}

/// Two-valued evaluation of a formula that may contain definitions. The
/// interpretation must be two-valued on the formula's atoms. A definition
/// subformula is true exactly when the restriction of `i` to its atoms is
/// the well-founded model determined by the open part of `i`, and that
/// model is two-valued.
pub fn truth(formula: &Formula, i: &Interpretation) -> Result<TruthValue, Error> {
    match formula {
        Formula::True => Ok(TruthValue::T),
        Formula::False => Ok(TruthValue::F),
        Formula::Atom(a) => {
            let v = i.value(a)?;
            if !v.is_two_valued() {
                return Err(Error::contract(
                    "truth",
                    format!("atom `{a}` is undefined; a two-valued interpretation is required"),
                ));
            }
            Ok(v)
        }
        Formula::Not(f) => Ok(truth(f, i)?.inverse()),
        Formula::And(a, b) => Ok(truth(a, i)?.and3(truth(b, i)?)),
        Formula::Or(a, b) => Ok(truth(a, i)?.or3(truth(b, i)?)),
        Formula::Def(d) => {
            let restricted = i.restrict(&d.vocab());
            if restricted.domain() != d.vocab() {
                return Err(Error::contract(
                    "truth",
                    "the interpretation must assign every atom of the definition",
                ));
            }
            if !restricted.is_two_valued() {
                return Err(Error::contract(
                    "truth",
                    "a two-valued interpretation is required to evaluate a definition",
                ));
            }
            let limit = wf_model(d, &i.restrict(&d.open()))?;
            Ok(TruthValue::from(limit == restricted))
        }
    }
}
