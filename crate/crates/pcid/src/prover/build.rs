//! Small proof-building gadgets shared by the completion procedures. Every
//! gadget builds validated rule instances, so a misuse surfaces as a
//! contract error instead of an unsound proof.

use crate::calculus::{Params, ProofTree, RuleError, RuleInstance, RuleName};
use crate::error::Error;
use crate::prover::lit::Lit;
use crate::syntax::{Formula, Sequent};

pub(crate) fn internal(e: RuleError) -> Error {
    Error::contract("prover", e.to_string())
}

/// Builds one validated node over already-built children.
pub(crate) fn node(
    rule: RuleName,
    params: Params,
    conclusion: Sequent,
    children: Vec<ProofTree>,
) -> Result<ProofTree, Error> {
    let premises = children.iter().map(|c| c.root().clone()).collect();
    let instance =
        RuleInstance::new(rule, params, conclusion, premises).map_err(internal)?;
    ProofTree::new(instance, children).map_err(internal)
}

/// Proves an axiomatic sequent: `false` on the left, `true` on the right,
/// or a formula shared by both sides.
pub(crate) fn axiom_for(s: &Sequent) -> Result<ProofTree, Error> {
    if s.antecedent.contains(&Formula::False) {
        return node(RuleName::AxiomBot, Params::default(), s.clone(), vec![]);
    }
    if s.succedent.contains(&Formula::True) {
        return node(RuleName::AxiomTop, Params::default(), s.clone(), vec![]);
    }
    match s.antecedent.intersection(&s.succedent).next() {
        Some(shared) => node(
            RuleName::AxiomId,
            Params::formula(shared.clone()),
            s.clone(),
            vec![],
        ),
        None => Err(Error::contract(
            "prover",
            format!("`{s}` is not an axiom"),
        )),
    }
}

/// Weakens a proof to a superset sequent, one formula at a time.
pub(crate) fn weaken_to(proof: ProofTree, target: &Sequent) -> Result<ProofTree, Error> {
    let root = proof.root();
    if !root.antecedent.is_subset(&target.antecedent)
        || !root.succedent.is_subset(&target.succedent)
    {
        return Err(Error::contract(
            "prover",
            format!("cannot weaken `{root}` to `{target}`"),
        ));
    }
    let left: Vec<Formula> = target
        .antecedent
        .difference(&root.antecedent)
        .cloned()
        .collect();
    let right: Vec<Formula> = target
        .succedent
        .difference(&root.succedent)
        .cloned()
        .collect();
    let mut cur = proof;
    for f in left {
        let conclusion = cur.root().with_left(f.clone());
        cur = node(RuleName::WeakenL, Params::formula(f), conclusion, vec![cur])?;
    }
    for f in right {
        let conclusion = cur.root().with_right(f.clone());
        cur = node(RuleName::WeakenR, Params::formula(f), conclusion, vec![cur])?;
    }
    Ok(cur)
}

/// From `Π ⟶ Σ, ⊥` derives `Π ⟶ Σ` by cutting the absurdity.
pub(crate) fn bot_elim(proof: ProofTree) -> Result<ProofTree, Error> {
    let conclusion = proof.root().without_right(&Formula::False);
    let right = axiom_for(&conclusion.with_left(Formula::False))?;
    node(
        RuleName::Cut,
        Params::cut(Formula::False),
        conclusion,
        vec![proof, right],
    )
}

/// From `Π, ~q ⟶ Σ` derives `Π ⟶ Σ, q`: the negative assumption moves
/// across the turnstile.
pub(crate) fn neg_left_to_right(q: &Formula, proof: ProofTree) -> Result<ProofTree, Error> {
    let neg = Formula::not(q.clone());
    let conclusion = proof
        .root()
        .without_left(&neg)
        .with_right(q.clone());
    // Π ⟶ Σ, q, ~q by not-r over the axiom Π, q ⟶ Σ, q.
    let excluded = conclusion.with_right(neg.clone());
    let ax = axiom_for(&excluded.without_right(&neg).with_left(q.clone()))?;
    let left = node(
        RuleName::NotR,
        Params::formula(q.clone()),
        excluded,
        vec![ax],
    )?;
    // Π, ~q ⟶ Σ, q by weakening the given proof.
    let right = weaken_to(proof, &conclusion.with_left(neg.clone()))?;
    node(RuleName::Cut, Params::cut(neg), conclusion, vec![left, right])
}

/// From `Π, q ⟶ Σ` derives `Π ⟶ Σ, ~q`.
pub(crate) fn pos_left_to_not_right(q: &Formula, proof: ProofTree) -> Result<ProofTree, Error> {
    let conclusion = proof
        .root()
        .without_left(q)
        .with_right(Formula::not(q.clone()));
    node(
        RuleName::NotR,
        Params::formula(q.clone()),
        conclusion,
        vec![proof],
    )
}

/// Merges a case split on `q`: from `Π, q ⟶ Σ` and `Π, ~q ⟶ Σ` derives
/// `Π ⟶ Σ`.
pub(crate) fn merge_on_atom(
    q: &Formula,
    pos: ProofTree,
    neg: ProofTree,
) -> Result<ProofTree, Error> {
    let conclusion = pos.root().without_left(q);
    let left = neg_left_to_right(q, neg)?;
    node(
        RuleName::Cut,
        Params::cut(q.clone()),
        conclusion,
        vec![left, pos],
    )
}

/// Given a proof of `base ⟶ succ, l̄` where the literal `l` itself sits in
/// `base`, discharges the contradiction and derives `base ⟶ succ`.
pub(crate) fn conflict_literal_elim(
    l: &Lit,
    wproof: ProofTree,
) -> Result<ProofTree, Error> {
    let comp = l.complement().formula();
    let conclusion = wproof.root().without_right(&comp);
    if !conclusion.antecedent.contains(&l.formula()) {
        return Err(Error::contract(
            "prover",
            format!("conflict elimination needs `{}` on the left", l.formula()),
        ));
    }
    let atom_f = Formula::Atom(l.atom.clone());
    let c1 = conclusion.with_left(comp.clone());
    let right = if l.positive {
        // comp = ~a with a in base: not-l sends a to the right, axiom.
        let ax = axiom_for(&c1.without_left(&comp).with_right(atom_f.clone()))?;
        node(RuleName::NotL, Params::formula(atom_f), c1, vec![ax])?
    } else {
        // comp = a with ~a in base: not-l keeps the context liberal.
        let ax = axiom_for(&c1.with_right(atom_f.clone()))?;
        node(RuleName::NotL, Params::formula(atom_f), c1, vec![ax])?
    };
    node(
        RuleName::Cut,
        Params::cut(comp),
        conclusion,
        vec![wproof, right],
    )
}
