//! The reduction engine: decomposes a sequent along its connectives until
//! only axioms and atomic leaves remain, then assembles the corresponding
//! rule applications. Every reduction is invertible, so validity is
//! preserved along the way.

use crate::calculus::{Params, ProofTree, RuleName};
use crate::error::Error;
use crate::prover::build::{axiom_for, node};
use crate::syntax::{Definition, Formula, Sequent};

/// One reduction step on a sequent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Reduction {
    /// `~A` on the left: move `A` to the right.
    NotL(Formula),
    /// `~A` on the right: move `A` to the left.
    NotR(Formula),
    /// A conjunction on the left splits into both conjuncts.
    AndL(Formula),
    /// A conjunction on the right branches.
    AndR(Formula),
    /// A disjunction on the left branches.
    OrL(Formula),
    /// A disjunction on the right splits into both disjuncts.
    OrR(Formula),
    /// `true` on the left is dropped (a weakening, read upward).
    TopL,
    /// `false` on the right is dropped (a weakening, read upward).
    BotR,
    /// A definition on the right is introduced over a primed copy.
    DefIntro(Definition),
}

/// Picks the next reduction: the lexicographically least reducible formula
/// on the left, else on the right, else (when definitions are allowed) the
/// least definition on the right.
pub(crate) fn pick_reduction(s: &Sequent, allow_defs: bool) -> Option<Reduction> {
    let left = s
        .antecedent
        .iter()
        .filter(|f| {
            matches!(
                f,
                Formula::Not(_) | Formula::And(..) | Formula::Or(..) | Formula::True
            )
        })
        .min_by_key(|f| f.to_string());
    if let Some(f) = left {
        return Some(match f {
            Formula::Not(inner) => Reduction::NotL((**inner).clone()),
            Formula::And(..) => Reduction::AndL(f.clone()),
            Formula::Or(..) => Reduction::OrL(f.clone()),
            Formula::True => Reduction::TopL,
            _ => unreachable!(),
        });
    }
    let right = s
        .succedent
        .iter()
        .filter(|f| {
            matches!(
                f,
                Formula::Not(_) | Formula::And(..) | Formula::Or(..) | Formula::False
            )
        })
        .min_by_key(|f| f.to_string());
    if let Some(f) = right {
        return Some(match f {
            Formula::Not(inner) => Reduction::NotR((**inner).clone()),
            Formula::And(..) => Reduction::AndR(f.clone()),
            Formula::Or(..) => Reduction::OrR(f.clone()),
            Formula::False => Reduction::BotR,
            _ => unreachable!(),
        });
    }
    if allow_defs {
        let def = s
            .succedent
            .iter()
            .filter(|f| matches!(f, Formula::Def(_)))
            .min_by_key(|f| f.to_string());
        if let Some(Formula::Def(d)) = def {
            return Some(Reduction::DefIntro(d.clone()));
        }
    }
    None
}

/// The premises the reduction leaves to prove, in rule order.
pub(crate) fn premises_of(s: &Sequent, red: &Reduction) -> Vec<Sequent> {
    match red {
        Reduction::NotL(inner) => {
            let neg = Formula::not(inner.clone());
            vec![s.without_left(&neg).with_right(inner.clone())]
        }
        Reduction::NotR(inner) => {
            let neg = Formula::not(inner.clone());
            vec![s.without_right(&neg).with_left(inner.clone())]
        }
        Reduction::AndL(f) => {
            let Formula::And(a, b) = f else { unreachable!() };
            vec![s
                .without_left(f)
                .with_left((**a).clone())
                .with_left((**b).clone())]
        }
        Reduction::AndR(f) => {
            let Formula::And(a, b) = f else { unreachable!() };
            let base = s.without_right(f);
            vec![
                base.with_right((**a).clone()),
                base.with_right((**b).clone()),
            ]
        }
        Reduction::OrL(f) => {
            let Formula::Or(a, b) = f else { unreachable!() };
            let base = s.without_left(f);
            vec![base.with_left((**a).clone()), base.with_left((**b).clone())]
        }
        Reduction::OrR(f) => {
            let Formula::Or(a, b) = f else { unreachable!() };
            vec![s
                .without_right(f)
                .with_right((**a).clone())
                .with_right((**b).clone())]
        }
        Reduction::TopL => vec![s.without_left(&Formula::True)],
        Reduction::BotR => vec![s.without_right(&Formula::False)],
        Reduction::DefIntro(d) => {
            let sigma = s.without_right(&Formula::Def(d.clone()));
            let d_prime = Formula::Def(d.primed());
            d.defined()
                .iter()
                .map(|p| {
                    let equiv = Formula::iff(
                        Formula::Atom(p.primed()),
                        Formula::Atom(p.clone()),
                    );
                    sigma.clone().with_left(d_prime.clone()).with_right(equiv)
                })
                .collect()
        }
    }
}

/// Assembles the rule application a reduction corresponds to.
pub(crate) fn instantiate(
    s: &Sequent,
    red: &Reduction,
    children: Vec<ProofTree>,
) -> Result<ProofTree, Error> {
    let (rule, params) = match red {
        Reduction::NotL(inner) => (RuleName::NotL, Params::formula(inner.clone())),
        Reduction::NotR(inner) => (RuleName::NotR, Params::formula(inner.clone())),
        Reduction::AndL(f) => (RuleName::AndL, Params::formula(f.clone())),
        Reduction::AndR(f) => (RuleName::AndR, Params::formula(f.clone())),
        Reduction::OrL(f) => (RuleName::OrL, Params::formula(f.clone())),
        Reduction::OrR(f) => (RuleName::OrR, Params::formula(f.clone())),
        Reduction::TopL => (RuleName::WeakenL, Params::formula(Formula::True)),
        Reduction::BotR => (RuleName::WeakenR, Params::formula(Formula::False)),
        Reduction::DefIntro(d) => (
            RuleName::DefIntro,
            Params::formula(Formula::Def(d.clone())),
        ),
    };
    node(rule, params, s.clone(), children)
}

/// Reduces a sequent to axioms and atomic leaves, proving the leaves with
/// the given procedure, and assembles the full proof.
pub(crate) fn reduce_and_prove(
    s: &Sequent,
    allow_defs: bool,
    leaf: &mut dyn FnMut(&Sequent) -> Result<ProofTree, Error>,
) -> Result<ProofTree, Error> {
    if s.is_axiom() {
        return axiom_for(s);
    }
    match pick_reduction(s, allow_defs) {
        Some(red) => {
            let children = premises_of(s, &red)
                .iter()
                .map(|p| reduce_and_prove(p, allow_defs, leaf))
                .collect::<Result<Vec<_>, Error>>()?;
            instantiate(s, &red, children)
        }
        None => leaf(s),
    }
}
