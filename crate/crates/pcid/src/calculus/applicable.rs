//! Enumeration of the rules applicable to a sequent, with the parameters
//! that can be read off the sequent itself.

use crate::calculus::{Params, RuleName};
use crate::syntax::{Formula, Sequent};

/// A rule that could conclude the given sequent. Parameters that cannot be
/// determined from the conclusion alone (such as a cut formula or an
/// unfolded set) are left unset and described in `note`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleTemplate {
    pub rule: RuleName,
    pub params: Params,
    /// What remains to be chosen to complete the instance, if anything.
    pub note: Option<&'static str>,
}

impl RuleTemplate {
    fn full(rule: RuleName, params: Params) -> RuleTemplate {
        RuleTemplate {
            rule,
            params,
            note: None,
        }
    }

    fn partial(rule: RuleName, params: Params, note: &'static str) -> RuleTemplate {
        RuleTemplate {
            rule,
            params,
            note: Some(note),
        }
    }
}

/// Lists every rule that could conclude `s`, in catalog order, with one
/// template per admissible principal formula.
pub fn applicable_rules(s: &Sequent) -> Vec<RuleTemplate> {
    let mut out = Vec::new();

    for a in s.antecedent.intersection(&s.succedent) {
        out.push(RuleTemplate::full(
            RuleName::AxiomId,
            Params::formula(a.clone()),
        ));
    }
    if s.antecedent.contains(&Formula::False) {
        out.push(RuleTemplate::full(RuleName::AxiomBot, Params::default()));
    }
    if s.succedent.contains(&Formula::True) {
        out.push(RuleTemplate::full(RuleName::AxiomTop, Params::default()));
    }
    for a in &s.antecedent {
        out.push(RuleTemplate::full(
            RuleName::WeakenL,
            Params::formula(a.clone()),
        ));
    }
    for a in &s.succedent {
        out.push(RuleTemplate::full(
            RuleName::WeakenR,
            Params::formula(a.clone()),
        ));
    }
    for a in &s.antecedent {
        out.push(RuleTemplate::full(
            RuleName::ContractL,
            Params::formula(a.clone()),
        ));
    }
    for a in &s.succedent {
        out.push(RuleTemplate::full(
            RuleName::ContractR,
            Params::formula(a.clone()),
        ));
    }
    out.push(RuleTemplate::partial(
        RuleName::Cut,
        Params::default(),
        "any cut formula may be chosen",
    ));
    for f in &s.antecedent {
        if let Formula::Not(inner) = f {
            out.push(RuleTemplate::full(
                RuleName::NotL,
                Params::formula(*inner.clone()),
            ));
        }
    }
    for f in &s.succedent {
        if let Formula::Not(inner) = f {
            out.push(RuleTemplate::full(
                RuleName::NotR,
                Params::formula(*inner.clone()),
            ));
        }
    }
    for f in &s.antecedent {
        if matches!(f, Formula::And(..)) {
            out.push(RuleTemplate::full(RuleName::AndL, Params::formula(f.clone())));
        }
    }
    for f in &s.succedent {
        if matches!(f, Formula::And(..)) {
            out.push(RuleTemplate::full(RuleName::AndR, Params::formula(f.clone())));
        }
    }
    for f in &s.antecedent {
        if matches!(f, Formula::Or(..)) {
            out.push(RuleTemplate::full(RuleName::OrL, Params::formula(f.clone())));
        }
    }
    for f in &s.succedent {
        if matches!(f, Formula::Or(..)) {
            out.push(RuleTemplate::full(RuleName::OrR, Params::formula(f.clone())));
        }
    }
    for f in &s.antecedent {
        if let Formula::Def(d) = f {
            for p in d.defined() {
                if s.succedent.contains(&Formula::Atom(p.clone())) {
                    out.push(RuleTemplate::full(
                        RuleName::DefR,
                        Params {
                            formula: Some(f.clone()),
                            atom: Some(p),
                            ..Params::default()
                        },
                    ));
                }
            }
        }
    }
    for f in &s.antecedent {
        if let Formula::Def(d) = f {
            for p in d.defined() {
                if s.antecedent.contains(&Formula::Atom(p.clone())) {
                    out.push(RuleTemplate::partial(
                        RuleName::DefL,
                        Params {
                            formula: Some(f.clone()),
                            atom: Some(p),
                            ..Params::default()
                        },
                        "an unfolded set containing the atom must be chosen",
                    ));
                }
            }
        }
    }
    for f in &s.antecedent {
        if matches!(f, Formula::Def(_)) {
            out.push(RuleTemplate::partial(
                RuleName::DefNontotal,
                Params::formula(f.clone()),
                "a non-empty set of defined atoms must be chosen",
            ));
        }
    }
    for f in &s.succedent {
        if matches!(f, Formula::Def(_)) {
            out.push(RuleTemplate::full(
                RuleName::DefIntro,
                Params::formula(f.clone()),
            ));
        }
    }
    out
}
