//! Acceptance suite: one test per release criterion. Each test prints a
//! single pass/fail line via the harness; expected values are computed by
//! the enumeration oracles, never by the code under test.

mod common;

use std::collections::BTreeMap;

use common::*;
use pcid::calculus::check_proof;
use pcid::prover::{prove, ProveOutcome};
use pcid::semantics::{
    eligible_derive_true, eval3, is_total, is_unfounded, is_valid, satisfiable, truth, wf_model,
    wf_trace, Bounds, Interpretation, InterpretationEnumeration, Sat, StepPolicy, Totality,
    TruthValue, Validity, Vocabulary, WfStepKind,
};
use pcid::syntax::{Atom, Definition, Formula, Sequent};
use pcid::textio::{
    parse_proof, parse_sequent, parse_theory, print_proof, print_sequent, print_theory,
};
use rand::Rng;

const GOLDEN_PROOF: &str = include_str!("fixtures/golden.lpidproof");
const UNSOUND_PROOF: &str = include_str!("fixtures/unsound.lpidproof");

/// Criterion 1 — golden suite: the two-rule loop has exactly one model
/// (both atoms false); the reference proof checks; the unrenamed variant is
/// rejected with a schema mismatch; and `prove` reproduces a checkable
/// proof of the reference sequent.
#[test]
fn criterion_1_golden_suite() {
    let bounds = Bounds::default();

    // (a) { p <- q. q <- p. } has exactly one model, with both atoms false.
    let theory = parse_theory("{ p <- q. q <- p. }").unwrap();
    let vocab = Vocabulary::closure(theory.iter().flat_map(|f| f.atoms()));
    assert_eq!(vocab.len(), 2);
    let mut models = Vec::new();
    for i in InterpretationEnumeration::new(&vocab, 22).unwrap() {
        if theory
            .iter()
            .all(|f| truth(f, &i).unwrap() == TruthValue::T)
        {
            models.push(i);
        }
    }
    let both_false = Interpretation::from_pairs(vec![
        (atom("p"), TruthValue::F),
        (atom("q"), TruthValue::F),
    ]);
    assert_eq!(models, vec![both_false.clone()]);
    assert_eq!(
        satisfiable(&theory, &bounds).unwrap(),
        Sat::Model(both_false)
    );

    // (b) The reference proof is accepted and proves the documented root.
    let golden = parse_proof(GOLDEN_PROOF).unwrap();
    let report = check_proof(&golden);
    assert!(report.accepted, "golden proof rejected: {:?}", report.failure);
    assert_eq!(golden.size(), 11);
    let root = parse_sequent("o, { p <- o. q <- q & p. } |- p & ~q").unwrap();
    assert_eq!(report.root, root);

    // (c) The same argument without the required renaming is rejected, and
    // the reason is a schema mismatch at the offending rule.
    let unsound = parse_proof(UNSOUND_PROOF).unwrap();
    let report = check_proof(&unsound);
    assert!(!report.accepted);
    let reason = report.failure.unwrap().to_string();
    assert!(
        reason.contains("schema mismatch"),
        "unexpected rejection reason: {reason}"
    );

    // (d) The prover reproves the reference sequent with a checkable proof.
    match prove(&root, &bounds).unwrap() {
        ProveOutcome::Proof(t) => {
            assert_eq!(t.root(), &root);
            assert!(check_proof(&t).accepted);
        }
        other => panic!("expected a proof, got {other:?}"),
    }
}

/// Criterion 2 — soundness: across at least 5,000 random sequents, every
/// proof the prover emits is checker-accepted and has an oracle-valid root,
/// and every counter-model it reports actually falsifies the sequent.
#[test]
fn criterion_2_soundness() {
    let bounds = Bounds::default();
    let vocab = atoms(&["p", "q", "r", "s", "t"]);
    let mut rng = rng(0x5eed_0002);
    let (mut proofs, mut counter_models, mut out_of_scope, mut resource_limits) = (0, 0, 0, 0);
    for _ in 0..5_000 {
        let s = gen_sequent(&mut rng, &vocab);
        match prove(&s, &bounds).unwrap() {
            ProveOutcome::Proof(t) => {
                proofs += 1;
                assert_eq!(t.root(), &s, "proof root differs from the input");
                assert!(check_proof(&t).accepted, "rejected proof for `{s}`");
                assert_eq!(
                    is_valid(&s, &bounds).unwrap(),
                    Validity::Valid,
                    "proved an invalid sequent: `{s}`"
                );
            }
            ProveOutcome::CounterModel(m) => {
                counter_models += 1;
                for f in &s.antecedent {
                    assert_eq!(truth(f, &m).unwrap(), TruthValue::T, "`{m}` vs `{s}`");
                }
                for f in &s.succedent {
                    assert_eq!(truth(f, &m).unwrap(), TruthValue::F, "`{m}` vs `{s}`");
                }
            }
            ProveOutcome::OutOfScope(_) => out_of_scope += 1,
            ProveOutcome::ResourceLimit => resource_limits += 1,
        }
    }
    assert!(proofs >= 500, "only {proofs} proofs; the sample is too thin");
    assert!(counter_models >= 500, "only {counter_models} counter-models");
    assert_eq!(resource_limits, 0, "unexpected resource limits at 5 atoms");
    // Out-of-scope outcomes are legitimate (non-total definitions in
    // introducible positions) but should stay a minority.
    assert!(out_of_scope < 2_500, "{out_of_scope} out-of-scope outcomes");
}

/// Criterion 3 — completeness on the restricted class: for every sequent
/// `D, ctx |- goal` with one single-head definition over a fixed depth-2
/// body grammar on three atoms, the prover finds a proof exactly when the
/// oracle says the sequent is valid.
#[test]
fn criterion_3_completeness() {
    let bounds = Bounds::default();
    let p = atom("p");
    let lits: Vec<Formula> = vec![
        Formula::Atom(atom("p")),
        Formula::Atom(atom("q")),
        Formula::Atom(atom("o")),
        Formula::not(Formula::Atom(atom("p"))),
        Formula::not(Formula::Atom(atom("q"))),
        Formula::not(Formula::Atom(atom("o"))),
        Formula::True,
        Formula::False,
    ];
    let mut bodies: Vec<Formula> = lits.clone();
    for a in &lits {
        for b in &lits {
            bodies.push(Formula::and(a.clone(), b.clone()));
            bodies.push(Formula::or(a.clone(), b.clone()));
        }
    }
    assert_eq!(bodies.len(), 136);

    let ctx_options = |name: &str| -> Vec<Option<Formula>> {
        vec![
            None,
            Some(Formula::Atom(atom(name))),
            Some(Formula::not(Formula::Atom(atom(name)))),
        ]
    };
    let goals: Vec<Formula> = vec![
        Formula::Atom(atom("p")),
        Formula::not(Formula::Atom(atom("p"))),
        Formula::Atom(atom("q")),
        Formula::not(Formula::Atom(atom("q"))),
    ];

    let (mut total, mut valid) = (0, 0);
    for body in &bodies {
        let d = Definition::normalize(vec![(p.clone(), body.clone())]).unwrap();
        for cq in ctx_options("q") {
            for co in ctx_options("o") {
                for goal in &goals {
                    let mut ante = vec![Formula::Def(d.clone())];
                    ante.extend(cq.clone());
                    ante.extend(co.clone());
                    let s = Sequent::new(ante, vec![goal.clone()]);
                    total += 1;
                    let oracle = is_valid(&s, &bounds).unwrap();
                    match prove(&s, &bounds).unwrap() {
                        ProveOutcome::Proof(t) => {
                            assert_eq!(
                                oracle,
                                Validity::Valid,
                                "proved the invalid sequent `{s}`"
                            );
                            assert!(check_proof(&t).accepted, "rejected proof for `{s}`");
                            valid += 1;
                        }
                        ProveOutcome::CounterModel(_) => {
                            assert!(
                                matches!(oracle, Validity::CounterModel(_)),
                                "failed to prove the valid sequent `{s}`"
                            );
                        }
                        other => panic!("unexpected outcome {other:?} for `{s}`"),
                    }
                }
            }
        }
    }
    assert_eq!(total, 4_896);
    assert!(valid >= 500, "only {valid} valid sequents in the class");
}

/// A step policy that picks uniformly among every legal step: any eligible
/// derive-true atom, or any non-empty unfounded subset of the unknown
/// defined atoms.
struct RandomPolicy {
    rng: rand_chacha::ChaCha8Rng,
}

impl StepPolicy for RandomPolicy {
    fn choose(
        &mut self,
        d: &Definition,
        current: &Interpretation,
    ) -> Result<Option<WfStepKind>, pcid::Error> {
        let mut candidates: Vec<WfStepKind> = eligible_derive_true(d, current)?
            .into_iter()
            .map(WfStepKind::DeriveTrue)
            .collect();
        let unknown: Vec<Atom> = d
            .defined()
            .into_iter()
            .filter(|a| current.get(a) == Some(TruthValue::U))
            .collect();
        for mask in 1u32..(1 << unknown.len()) {
            let set = unknown
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, a)| a.clone())
                .collect();
            if is_unfounded(d, current, &set)? {
                candidates.push(WfStepKind::DeriveFalse(set));
            }
        }
        if candidates.is_empty() {
            return Ok(None);
        }
        let i = self.rng.random_range(0..candidates.len());
        Ok(Some(candidates.swap_remove(i)))
    }
}

/// Criterion 4 — semantics invariants: precision and truth monotonicity of
/// the three-valued evaluation on 10,000 random triples each; confluence of
/// the well-founded construction across 20 random policies on 1,000
/// definition/open-interpretation instances; and on every model that the
/// satisfiability oracle finds, each definition statement holds and each
/// rule head agrees with its body.
#[test]
fn criterion_4_semantics_invariants() {
    let vocab = atoms(&["a", "b", "c", "d"]);
    let vocab_set = vocab.iter().cloned().collect();

    // Precision monotonicity: refining unknowns never changes a decided
    // value, so eval3 under I is either unknown or equal to eval3 under J.
    let mut r = rng(0x5eed_0441);
    for _ in 0..10_000 {
        let f = gen_pc(&mut r, &vocab, 3);
        let i = gen_interp(&mut r, &vocab_set, false);
        let mut j = i.clone();
        for a in &vocab {
            if i.get(a) == Some(TruthValue::U) && r.random_bool(0.5) {
                let v = if r.random_bool(0.5) {
                    TruthValue::T
                } else {
                    TruthValue::F
                };
                j.set(a.clone(), v);
            }
        }
        assert!(i.leq_precision(&j).unwrap());
        let vi = eval3(&f, &i).unwrap();
        let vj = eval3(&f, &j).unwrap();
        assert!(
            vi.leq_precision(vj),
            "precision broke for `{f}`: {vi:?} vs {vj:?} under {i} / {j}"
        );
    }

    // Truth monotonicity: raising atoms that occur only positively and
    // lowering atoms that occur only negatively never lowers the value.
    let mut r = rng(0x5eed_0442);
    for _ in 0..10_000 {
        let f = gen_pc(&mut r, &vocab, 3);
        let mut polarity: BTreeMap<Atom, (bool, bool)> = BTreeMap::new();
        occurrences(&f, true, &mut polarity);
        let i = gen_interp(&mut r, &vocab_set, false);
        let mut j = i.clone();
        for a in &vocab {
            let (pos, neg) = polarity.get(a).copied().unwrap_or((false, false));
            if pos && neg {
                continue;
            }
            let cur = i.get(a).unwrap();
            if pos && cur != TruthValue::T && r.random_bool(0.5) {
                j.set(a.clone(), raise(&mut r, cur));
            } else if neg && cur != TruthValue::F && r.random_bool(0.5) {
                j.set(a.clone(), lower(&mut r, cur));
            }
        }
        let vi = eval3(&f, &i).unwrap();
        let vj = eval3(&f, &j).unwrap();
        assert!(vi <= vj, "truth order broke for `{f}`: {vi:?} > {vj:?}");
    }

    // Confluence: every terminal induction reaches the same limit, no
    // matter which legal step is taken at each point.
    let mut r = rng(0x5eed_0443);
    let heads = atoms(&["p", "q", "r"]);
    let def_vocab = atoms(&["p", "q", "r", "o1", "o2"]);
    for _ in 0..1_000 {
        let n_heads = r.random_range(1..=heads.len());
        let d = gen_definition(&mut r, &heads[..n_heads], &def_vocab, 2);
        let open = d.open();
        let i_open = gen_interp(&mut r, &open, true);
        let limit = wf_model(&d, &i_open).unwrap();
        for policy_seed in 0..20 {
            let mut policy = RandomPolicy {
                rng: rng(0x9000_0000 + policy_seed),
            };
            let trace = wf_trace(&d, &i_open, &mut policy).unwrap();
            assert_eq!(
                trace.limit, limit,
                "policy {policy_seed} reached a different limit for `{d}`"
            );
        }
    }

    // Models found by the satisfiability oracle satisfy every statement,
    // and on definition statements each head agrees with its body.
    let mut r = rng(0x5eed_0444);
    let bounds = Bounds::default();
    let mut models_seen = 0;
    for _ in 0..2_000 {
        let theory = gen_theory(&mut r, &vocab);
        if let Sat::Model(m) = satisfiable(&theory, &bounds).unwrap() {
            models_seen += 1;
            for f in &theory {
                assert_eq!(truth(f, &m).unwrap(), TruthValue::T);
                if let Formula::Def(d) = f {
                    for (head, body) in d.rules() {
                        assert_eq!(
                            m.get(head) == Some(TruthValue::T),
                            truth(body, &m).unwrap() == TruthValue::T,
                            "head `{head}` disagrees with its body under {m}"
                        );
                    }
                }
            }
        }
    }
    assert!(models_seen >= 500, "only {models_seen} models found");
}

fn occurrences(f: &Formula, positive: bool, out: &mut BTreeMap<Atom, (bool, bool)>) {
    match f {
        Formula::True | Formula::False => {}
        Formula::Atom(a) => {
            let e = out.entry(a.clone()).or_insert((false, false));
            if positive {
                e.0 = true;
            } else {
                e.1 = true;
            }
        }
        Formula::Not(g) => occurrences(g, !positive, out),
        Formula::And(a, b) | Formula::Or(a, b) => {
            occurrences(a, positive, out);
            occurrences(b, positive, out);
        }
        Formula::Def(_) => unreachable!("monotonicity triples are definition-free"),
    }
}

fn raise(r: &mut rand_chacha::ChaCha8Rng, v: TruthValue) -> TruthValue {
    match v {
        TruthValue::F => {
            if r.random_bool(0.5) {
                TruthValue::U
            } else {
                TruthValue::T
            }
        }
        _ => TruthValue::T,
    }
}

fn lower(r: &mut rand_chacha::ChaCha8Rng, v: TruthValue) -> TruthValue {
    match v {
        TruthValue::T => {
            if r.random_bool(0.5) {
                TruthValue::U
            } else {
                TruthValue::F
            }
        }
        _ => TruthValue::F,
    }
}

/// Criterion 5 — complexity shapes: (a) every random stratified definition
/// is total; (b) totality of `{ p <- ~p & T }` with respect to the empty
/// theory coincides with unsatisfiability of the theory `T`.
#[test]
fn criterion_5_complexity_shapes() {
    let bounds = Bounds::default();

    let mut r = rng(0x5eed_0551);
    for _ in 0..1_000 {
        let d = gen_stratified(&mut r);
        assert_eq!(
            is_total(&d, &[], &bounds).unwrap(),
            Totality::Total,
            "stratified definition `{d}` is not total"
        );
    }

    let mut r = rng(0x5eed_0552);
    let p = atom("p");
    let xs = atoms(&["x0", "x1", "x2", "x3", "x4", "x5", "x6", "x7"]);
    let (mut sat_seen, mut unsat_seen) = (0, 0);
    for _ in 0..500 {
        let n_atoms = r.random_range(3..=xs.len());
        let vocab = &xs[..n_atoms];
        let mut theory: Vec<Formula> = (0..r.random_range(1..=3))
            .map(|_| gen_pc(&mut r, vocab, 3))
            .collect();
        if r.random_range(0..4) == 0 {
            // Force some unsatisfiable theories into the mix.
            let f = gen_pc(&mut r, vocab, 2);
            theory.push(f.clone());
            theory.push(Formula::not(f));
        }
        let body = Formula::and(
            Formula::not(Formula::Atom(p.clone())),
            Formula::conj_all(theory.clone()),
        );
        let d = Definition::normalize(vec![(p.clone(), body)]).unwrap();
        let total = is_total(&d, &[], &bounds).unwrap() == Totality::Total;
        let unsat = satisfiable(&theory, &bounds).unwrap() == Sat::Unsat;
        assert_eq!(
            total, unsat,
            "totality disagreed with unsatisfiability for `{d}`"
        );
        if unsat {
            unsat_seen += 1;
        } else {
            sat_seen += 1;
        }
    }
    assert!(sat_seen >= 50 && unsat_seen >= 50, "lopsided sample: {sat_seen} sat / {unsat_seen} unsat");
}

/// Criterion 6 — round-trip: printing and re-parsing is the identity on
/// 5,000 generated theories, sequents, and proofs, and printing is
/// idempotent.
#[test]
fn criterion_6_round_trip() {
    let vocab = atoms(&["p", "q", "r", "o"]);
    let mut artifacts = 0;

    let mut r = rng(0x5eed_0661);
    for _ in 0..2_200 {
        let theory = gen_theory(&mut r, &vocab);
        let text = print_theory(&theory);
        let back = parse_theory(&text).unwrap_or_else(|e| panic!("{e} in:\n{text}"));
        assert_eq!(back, theory, "theory round-trip changed:\n{text}");
        assert_eq!(print_theory(&back), text);
        artifacts += 1;
    }

    let mut r = rng(0x5eed_0662);
    for _ in 0..2_200 {
        let s = gen_sequent(&mut r, &vocab);
        let text = print_sequent(&s);
        let back = parse_sequent(&text).unwrap_or_else(|e| panic!("{e} in: {text}"));
        assert_eq!(back, s, "sequent round-trip changed: {text}");
        assert_eq!(print_sequent(&back), text);
        artifacts += 1;
    }

    // Proofs: propositional sequents that are valid by construction (the
    // goal is one of the hypotheses), plus definition-heavy sequents that
    // exercise the definition rules and their parameters.
    let bounds = Bounds::default();
    let mut proved = Vec::new();
    let mut r = rng(0x5eed_0663);
    while proved.len() < 530 {
        let n = r.random_range(1..=3);
        let gamma: Vec<Formula> = (0..n).map(|_| gen_pc(&mut r, &vocab, 3)).collect();
        let goal = gamma[r.random_range(0..gamma.len())].clone();
        let s = Sequent::new(gamma, vec![goal]);
        match prove(&s, &bounds).unwrap() {
            ProveOutcome::Proof(t) => proved.push(t),
            other => panic!("`{s}` should be provable, got {other:?}"),
        }
    }
    for text in [
        "o, { p <- o. q <- q & p. } |- p & ~q",
        "{ p <- ~p. } |-",
        "{ p <- ~p & q. }, q |-",
        "{ p <- true. }, { p <- false. } |-",
        "o, p |- { p <- o. }",
        "|- { p <- o. } | ~{ p <- o. }",
        "{ p <- q. q <- p. } |- ~p & ~q",
        "{ p <- p | o. }, o |- p",
    ] {
        let s = parse_sequent(text).unwrap();
        match prove(&s, &bounds).unwrap() {
            ProveOutcome::Proof(t) => proved.push(t),
            other => panic!("`{s}` should be provable, got {other:?}"),
        }
    }
    // Top up with definition sequents that are valid by construction and
    // exercise the definition rules with both rule-firing and unfounded
    // cases: the body literals (or their complements) are given as
    // hypotheses, so the defined atom's value is forced.
    let complement = |f: &Formula| match f {
        Formula::Not(g) => (**g).clone(),
        other => Formula::not(other.clone()),
    };
    let lits: Vec<Formula> = vec![
        Formula::Atom(atom("q")),
        Formula::Atom(atom("o")),
        Formula::not(Formula::Atom(atom("q"))),
        Formula::not(Formula::Atom(atom("o"))),
    ];
    let p_goal = Formula::Atom(atom("p"));
    for a in &lits {
        for b in &lits {
            let conj = Definition::normalize(vec![(
                atom("p"),
                Formula::and(a.clone(), b.clone()),
            )])
            .unwrap();
            let disj = Definition::normalize(vec![(
                atom("p"),
                Formula::or(a.clone(), b.clone()),
            )])
            .unwrap();
            let cases = [
                // Both conjuncts hold, so p fires.
                (conj.clone(), vec![a.clone(), b.clone()], p_goal.clone()),
                // One conjunct fails, so p is unfounded.
                (conj, vec![complement(a)], Formula::not(p_goal.clone())),
                // One disjunct holds, so p fires.
                (disj.clone(), vec![a.clone()], p_goal.clone()),
                // Both disjuncts fail, so p is unfounded.
                (
                    disj,
                    vec![complement(a), complement(b)],
                    Formula::not(p_goal.clone()),
                ),
            ];
            for (d, hyps, goal) in cases {
                let mut ante = vec![Formula::Def(d)];
                ante.extend(hyps);
                let s = Sequent::new(ante, vec![goal]);
                match prove(&s, &bounds).unwrap() {
                    ProveOutcome::Proof(t) => proved.push(t),
                    other => panic!("`{s}` should be provable, got {other:?}"),
                }
            }
        }
    }
    assert!(proved.len() >= 600, "only {} proofs generated", proved.len());
    for t in &proved {
        let text = print_proof(t);
        let back = parse_proof(&text).unwrap_or_else(|e| panic!("{e} in:\n{text}"));
        assert_eq!(&back, t, "proof round-trip changed:\n{text}");
        assert_eq!(print_proof(&back), text);
        artifacts += 1;
    }

    assert!(artifacts >= 5_000, "only {artifacts} artifacts checked");
}
