//! The automatic prover: reduces a sequent to atomic leaves and certifies
//! each leaf from the well-founded semantics of the definitions involved.

mod build;
mod complete;
mod lit;
mod reduce;

use std::collections::BTreeSet;

use crate::calculus::{check_proof, ProofTree};
use crate::error::Error;
use crate::semantics::{is_total, is_valid, Bounds, Interpretation, Totality, Validity, Vocabulary};
use crate::syntax::{Definition, Sequent};

/// The result of an attempt to prove a sequent.
#[derive(Debug, Clone)]
pub enum ProveOutcome {
    /// A checkable proof of the sequent.
    Proof(ProofTree),
    /// A two-valued interpretation under which the sequent fails.
    CounterModel(Interpretation),
    /// The sequent is valid but uses a feature the proof search does not
    /// cover; the message explains which one.
    OutOfScope(String),
    /// A search bound was exceeded before an answer was reached.
    ResourceLimit,
}

/// Decides a sequent: returns a proof, a counter-model, an out-of-scope
/// report, or a resource-limit report.
pub fn prove(s: &Sequent, bounds: &Bounds) -> Result<ProveOutcome, Error> {
    let vocab = Vocabulary::closure(s.atoms());
    if vocab.len() > bounds.max_prover_atoms {
        return Ok(ProveOutcome::ResourceLimit);
    }

    // Definitions that can surface on the right of a sequent during
    // reduction must be total, or the introduction step is unsound. The
    // scope restriction is syntactic and preempts the validity verdict.
    let mut any_definition = false;
    let mut must_be_total: BTreeSet<Definition> = BTreeSet::new();
    for f in &s.antecedent {
        for (d, positive) in f.definition_occurrences() {
            any_definition = true;
            if !positive {
                must_be_total.insert(d.clone());
            }
        }
    }
    for f in &s.succedent {
        for (d, positive) in f.definition_occurrences() {
            any_definition = true;
            if positive {
                must_be_total.insert(d.clone());
            }
        }
    }

    // The definition rules rename atoms with fixed suffixes, and every rule
    // requires its renamed atoms to be fresh. Inputs that already use
    // renamed atoms next to a definition could collide with those copies,
    // so they are out of scope (without definitions nothing is renamed and
    // any atom name is fine).
    if any_definition {
        if let Some(a) = s.atoms().iter().find(|a| !a.is_user()) {
            return Ok(ProveOutcome::OutOfScope(format!(
                "the renamed atom `{a}` occurs next to a definition; renamed \
                 copies must be fresh"
            )));
        }
    }

    // Two distinct right-introducible definitions over a shared atom would
    // have to introduce the same primed copy into one branch, violating
    // freshness there.
    let introducible: Vec<&Definition> = must_be_total.iter().collect();
    for (i, d1) in introducible.iter().enumerate() {
        for d2 in &introducible[i + 1..] {
            if let Some(a) = d1.defined().intersection(&d2.defined()).next() {
                return Ok(ProveOutcome::OutOfScope(format!(
                    "the definitions `{d1}` and `{d2}` both define `{a}` and \
                     both require introduction on the right; their primed \
                     copies are not fresh"
                )));
            }
        }
    }

    for d in &must_be_total {
        match is_total(d, &[], bounds) {
            Ok(Totality::Total) => {}
            Ok(Totality::Witness(w)) => {
                let w = w.to_string();
                let under = if w.is_empty() {
                    "under the empty open assignment".to_string()
                } else {
                    format!("under `{w}`")
                };
                return Ok(ProveOutcome::OutOfScope(format!(
                    "the definition `{d}` must be introduced on the right but is not \
                     total: {under} its well-founded model is three-valued"
                )));
            }
            Err(Error::ResourceLimit { .. }) => {
                return Ok(ProveOutcome::OutOfScope(format!(
                    "totality of `{d}` could not be established within the \
                     enumeration bounds"
                )));
            }
            Err(e) => return Err(e),
        }
    }

    match is_valid(s, bounds) {
        Ok(Validity::Valid) => {}
        Ok(Validity::CounterModel(m)) => return Ok(ProveOutcome::CounterModel(m)),
        Err(Error::ResourceLimit { .. }) => return Ok(ProveOutcome::ResourceLimit),
        Err(e) => return Err(e),
    }

    let tree = match reduce::reduce_and_prove(s, true, &mut |leaf| {
        complete::prove_leaf(bounds, leaf)
    }) {
        Ok(tree) => tree,
        Err(Error::ResourceLimit { .. }) => return Ok(ProveOutcome::ResourceLimit),
        Err(e) => return Err(e),
    };

    let report = check_proof(&tree);
    if !report.accepted {
        let detail = report
            .failure
            .map(|f| f.to_string())
            .unwrap_or_else(|| "no failure recorded".to_string());
        return Err(Error::contract(
            "prover",
            format!("constructed proof was rejected: {detail}"),
        ));
    }
    if tree.root() != s {
        return Err(Error::contract(
            "prover",
            format!("constructed proof concludes `{}`, wanted `{s}`", tree.root()),
        ));
    }
    Ok(ProveOutcome::Proof(tree))
}

/// Proves a valid purely propositional sequent by connective reduction
/// alone. Every formula must be definition-free and the sequent valid;
/// otherwise a contract error is reported.
pub fn prove_propositional(s: &Sequent) -> Result<ProofTree, Error> {
    for f in s.antecedent.iter().chain(s.succedent.iter()) {
        if !f.is_pc() {
            return Err(Error::contract(
                "prover",
                format!("`{f}` is not propositional"),
            ));
        }
    }
    reduce::reduce_and_prove(s, false, &mut |leaf| {
        Err(Error::contract(
            "prover",
            format!("propositional leaf `{leaf}` is not an axiom"),
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semantics::TruthValue;
    use crate::textio::parse_sequent;

    fn prove_text(text: &str) -> ProveOutcome {
        let s = parse_sequent(text).unwrap();
        prove(&s, &Bounds::default()).unwrap()
    }

    fn expect_proof(text: &str) -> ProofTree {
        match prove_text(text) {
            ProveOutcome::Proof(t) => t,
            other => panic!("expected a proof for `{text}`, got {other:?}"),
        }
    }

    #[test]
    fn proves_the_guiding_example() {
        let tree = expect_proof("o, { p <- o. q <- q & p. } |- p & ~q");
        assert!(check_proof(&tree).accepted);
    }

    #[test]
    fn proves_propositional_validities() {
        expect_proof("|- p | ~p");
        expect_proof("p & q |- q & p");
        expect_proof("|- (p => q) | (q => p)");
        expect_proof("p <=> q, p |- q");
    }

    #[test]
    fn counter_models_are_first_in_enumeration_order() {
        match prove_text("p |- q") {
            ProveOutcome::CounterModel(m) => {
                let p = crate::syntax::Atom::user("p").unwrap();
                let q = crate::syntax::Atom::user("q").unwrap();
                assert_eq!(m.get(&p), Some(TruthValue::T));
                assert_eq!(m.get(&q), Some(TruthValue::F));
            }
            other => panic!("expected a counter-model, got {other:?}"),
        }
    }

    #[test]
    fn antecedent_definitions_need_no_totality() {
        // The loop definition is three-valued everywhere, hence
        // unsatisfiable on the left.
        let tree = expect_proof("{ p <- ~p. } |-");
        assert!(check_proof(&tree).accepted);
    }

    #[test]
    fn succedent_definitions_must_be_total() {
        match prove_text("p, { p <- ~p. } |- { p <- ~p. }") {
            ProveOutcome::OutOfScope(reason) => {
                assert!(reason.contains("total"), "unexpected reason: {reason}");
            }
            other => panic!("expected out-of-scope, got {other:?}"),
        }
        // The scope restriction is syntactic: it preempts even an invalid
        // sequent when a non-total definition sits positively on the right.
        match prove_text("|- { p <- ~p. }") {
            ProveOutcome::OutOfScope(_) => {}
            other => panic!("expected out-of-scope, got {other:?}"),
        }
    }

    #[test]
    fn total_definitions_may_be_introduced() {
        let tree = expect_proof("o, p |- { p <- o. }");
        assert!(check_proof(&tree).accepted);
        assert!(tree.size() > 1);
    }

    #[test]
    fn definition_truth_constrains_models() {
        // With the definition on the left, o forces p and refutes q.
        expect_proof("{ p <- o. q <- q & p. }, o, ~p |- ");
        expect_proof("{ p <- o. q <- q & p. }, o |- ~q & p");
        match prove_text("{ p <- o. q <- q & p. } |- p") {
            ProveOutcome::CounterModel(_) => {}
            other => panic!("expected a counter-model, got {other:?}"),
        }
    }

    #[test]
    fn conflicting_definitions_close_the_leaf() {
        let tree = expect_proof("{ p <- true. }, { p <- q. } |- q");
        assert!(check_proof(&tree).accepted);
    }

    #[test]
    fn overlapping_right_definitions_are_out_of_scope() {
        match prove_text("|- { p <- o. }, { p <- q. }") {
            ProveOutcome::OutOfScope(reason) => {
                assert!(reason.contains("fresh"), "unexpected reason: {reason}");
            }
            other => panic!("expected out-of-scope, got {other:?}"),
        }
        // Disjoint right introductions stay in scope.
        expect_proof("o, p, q |- { p <- o. }, { q <- o. }");
    }

    #[test]
    fn renamed_atoms_do_not_mix_with_definitions() {
        // The text grammar keeps generated atoms out of user input, but the
        // library accepts hand-built sequents, which must stay covered.
        use crate::syntax::{Atom, Definition, Formula};
        let p = Atom::user("p").unwrap();
        let renamed = Formula::Atom(p.renamed_pos());
        let d = Definition::normalize(vec![(p, Formula::Atom(Atom::user("o").unwrap()))])
            .unwrap();
        let s = Sequent::new(
            vec![renamed.clone(), Formula::Def(d)],
            vec![renamed.clone()],
        );
        match prove(&s, &Bounds::default()).unwrap() {
            ProveOutcome::OutOfScope(reason) => {
                assert!(reason.contains("p__r"), "unexpected reason: {reason}");
            }
            other => panic!("expected out-of-scope, got {other:?}"),
        }
        // Without definitions, renamed atoms are ordinary atoms.
        let t = Sequent::new(vec![renamed.clone()], vec![renamed]);
        match prove(&t, &Bounds::default()).unwrap() {
            ProveOutcome::Proof(tree) => assert!(check_proof(&tree).accepted),
            other => panic!("expected a proof, got {other:?}"),
        }
    }

    #[test]
    fn resource_limits_are_reported() {
        // 17 distinct atoms exceed the prover's default atom bound.
        let names: Vec<String> = (0..17).map(|i| format!("a{i}")).collect();
        let text = format!("|- {}", names.join(" | "));
        match prove_text(&text) {
            ProveOutcome::ResourceLimit => {}
            other => panic!("expected a resource limit, got {other:?}"),
        }
    }

    #[test]
    fn propositional_prover_rejects_definitions() {
        let s = parse_sequent("{ p <- o. } |- p").unwrap();
        assert!(prove_propositional(&s).is_err());
        let t = parse_sequent("|- p | ~p").unwrap();
        assert!(check_proof(&prove_propositional(&t).unwrap()).accepted);
    }
}
