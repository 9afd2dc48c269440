//! Completion procedures: turn semantic facts about well-founded models
//! into checkable proofs. Each procedure documents the sequent it proves;
//! all of them assume the fact they are asked to certify actually holds and
//! report a contract error otherwise.

use std::collections::{BTreeMap, BTreeSet};

use crate::calculus::{Params, ProofTree, RuleName};
use crate::error::Error;
use crate::prover::build::{
    axiom_for, bot_elim, conflict_literal_elim, merge_on_atom, neg_left_to_right, node,
    pos_left_to_not_right, weaken_to,
};
use crate::prover::lit::{formulas, from_interpretation, to_interpretation, Lit, LitSet};
use crate::prover::prove_propositional;
use crate::semantics::{wf_model, wf_trace, Bounds, DefaultPolicy, TruthValue, WfStepKind};
use crate::syntax::{Atom, Definition, Formula, Sequent};

fn seq(antecedent: BTreeSet<Formula>, succedent: BTreeSet<Formula>) -> Sequent {
    Sequent {
        antecedent,
        succedent,
    }
}

fn guard_extensions(bounds: &Bounds, unassigned: usize) -> Result<(), Error> {
    if unassigned >= 63 || (1usize << unassigned) > bounds.max_extensions {
        return Err(Error::ResourceLimit {
            what: "case-split extensions",
            size: unassigned,
            bound: bounds.max_extensions,
        });
    }
    Ok(())
}

/// Cuts an antecedent literal out of `cur` using a proof of the literal
/// from the definition and the open context alone.
fn cut_out(
    cur: ProofTree,
    m: &Lit,
    mut prove_lit: impl FnMut(&Lit) -> Result<ProofTree, Error>,
) -> Result<ProofTree, Error> {
    let mf = m.formula();
    let conclusion = cur.root().without_left(&mf);
    let left = weaken_to(prove_lit(m)?, &conclusion.with_right(mf.clone()))?;
    node(
        RuleName::Cut,
        Params::cut(mf),
        conclusion,
        vec![left, cur],
    )
}

/// Certifies one decided literal of a well-founded induction.
///
/// `gamma` assigns exactly the open atoms of `d`. For a literal `l` whose
/// atom the induction decides (to `l`'s sign), proves `D, Γ ⟶ l`. The
/// proof replays the induction: each derive-true step is a `def-r` over a
/// propositional proof of the body, each derive-false step a `def-l` over
/// propositional proofs refuting the renamed bodies, and earlier steps are
/// discharged by cuts.
pub(crate) fn replay_induction(d: &Definition, gamma: &LitSet, l: &Lit) -> Result<ProofTree, Error> {
    let def_f = Formula::Def(d.clone());
    let i_open = to_interpretation(gamma, &d.open());
    let trace = wf_trace(d, &i_open, &mut DefaultPolicy)?;
    let gamma_formulas: BTreeSet<Formula> = formulas(gamma).collect();

    let mut proofs: BTreeMap<Lit, ProofTree> = BTreeMap::new();
    let mut decided: LitSet = LitSet::new();

    for step in &trace.steps {
        let mut context = gamma_formulas.clone();
        context.extend(formulas(&decided));
        match &step.kind {
            WfStepKind::DeriveTrue(p) => {
                let body = d.body(p).expect("derived atoms are defined").clone();
                let prop = prove_propositional(&seq(
                    context.clone(),
                    BTreeSet::from([body]),
                ))?;
                let mut concl_ante = context.clone();
                concl_ante.insert(def_f.clone());
                let conclusion = seq(
                    concl_ante,
                    BTreeSet::from([Formula::Atom(p.clone())]),
                );
                let mut cur = node(
                    RuleName::DefR,
                    Params {
                        formula: Some(def_f.clone()),
                        atom: Some(p.clone()),
                        ..Params::default()
                    },
                    conclusion,
                    vec![prop],
                )?;
                for m in decided.clone() {
                    cur = cut_out(cur, &m, |m| {
                        proofs
                            .get(m)
                            .cloned()
                            .ok_or_else(|| Error::contract("prover", "missing literal proof"))
                    })?;
                }
                let lit = Lit::pos(p.clone());
                proofs.insert(lit.clone(), cur);
                decided.insert(lit);
            }
            WfStepKind::DeriveFalse(u) => {
                let neg_renamed: Vec<Formula> = u
                    .iter()
                    .map(|x| Formula::not(Formula::Atom(x.renamed_pos())))
                    .collect();
                let premise_proofs: Vec<ProofTree> = u
                    .iter()
                    .map(|q| {
                        let body = d.body(q).expect("unfounded atoms are defined");
                        let refuted = Formula::not(body.rename_pos(u));
                        let mut ante = context.clone();
                        ante.extend(neg_renamed.iter().cloned());
                        prove_propositional(&seq(ante, BTreeSet::from([refuted])))
                    })
                    .collect::<Result<_, _>>()?;
                for p in u {
                    let mut concl_ante = context.clone();
                    concl_ante.insert(Formula::Atom(p.clone()));
                    concl_ante.insert(def_f.clone());
                    let conclusion = seq(concl_ante, BTreeSet::new());
                    let def_l = node(
                        RuleName::DefL,
                        Params {
                            formula: Some(def_f.clone()),
                            atom: Some(p.clone()),
                            uset: Some(u.clone()),
                            ..Params::default()
                        },
                        conclusion,
                        premise_proofs.clone(),
                    )?;
                    let mut cur =
                        pos_left_to_not_right(&Formula::Atom(p.clone()), def_l)?;
                    for m in decided.clone() {
                        cur = cut_out(cur, &m, |m| {
                            proofs.get(m).cloned().ok_or_else(|| {
                                Error::contract("prover", "missing literal proof")
                            })
                        })?;
                    }
                    proofs.insert(Lit::neg(p.clone()), cur);
                }
                for p in u {
                    decided.insert(Lit::neg(p.clone()));
                }
            }
        }
    }

    proofs.remove(l).ok_or_else(|| {
        Error::contract(
            "prover",
            format!("the induction does not decide `{}`", l.formula()),
        )
    })
}

/// Extends `gamma` over the unassigned open atoms of `d`, proving the goal
/// in every extension and merging the case splits. The leaf obligation:
/// prove `D, Γ′ ⟶ goal` once every open atom is assigned.
fn extend_and_merge(
    bounds: &Bounds,
    d_formulas: &BTreeSet<Formula>,
    open: &BTreeSet<Atom>,
    gamma: &LitSet,
    goal: &Formula,
    leaf: &mut dyn FnMut(&LitSet) -> Result<ProofTree, Error>,
) -> Result<ProofTree, Error> {
    let assigned: BTreeSet<Atom> = gamma.iter().map(|l| l.atom.clone()).collect();
    let missing: Vec<Atom> = open.difference(&assigned).cloned().collect();
    guard_extensions(bounds, missing.len())?;
    fn go(
        gamma: &LitSet,
        missing: &[Atom],
        leaf: &mut dyn FnMut(&LitSet) -> Result<ProofTree, Error>,
    ) -> Result<ProofTree, Error> {
        match missing.split_first() {
            None => leaf(gamma),
            Some((q, rest)) => {
                let mut with_neg = gamma.clone();
                with_neg.insert(Lit::neg(q.clone()));
                let neg = go(&with_neg, rest, leaf)?;
                let mut with_pos = gamma.clone();
                with_pos.insert(Lit::pos(q.clone()));
                let pos = go(&with_pos, rest, leaf)?;
                merge_on_atom(&Formula::Atom(q.clone()), pos, neg)
            }
        }
    }
    let proof = go(gamma, &missing, leaf)?;
    let mut want = d_formulas.clone();
    want.extend(formulas(gamma));
    let expected = seq(want, BTreeSet::from([goal.clone()]));
    if proof.root() != &expected {
        return Err(Error::contract(
            "prover",
            format!("case merge produced `{}`, wanted `{expected}`", proof.root()),
        ));
    }
    Ok(proof)
}

/// Proves `D, Γ ⟶ l` for a defined literal that holds in the well-founded
/// model of every extension of `Γ`; conflicting context literals are
/// discharged instead where the model contradicts `Γ`.
pub(crate) fn prove_literal_in_extensions(
    bounds: &Bounds,
    d: &Definition,
    gamma: &LitSet,
    l: &Lit,
) -> Result<ProofTree, Error> {
    let def_f = Formula::Def(d.clone());
    let open = d.open();
    let defined = d.defined();
    let goal = l.formula();
    extend_and_merge(
        bounds,
        &BTreeSet::from([def_f.clone()]),
        &open,
        gamma,
        &goal,
        &mut |full| {
            let open_lits: LitSet = full
                .iter()
                .filter(|g| open.contains(&g.atom))
                .cloned()
                .collect();
            let wfm = wf_model(d, &to_interpretation(&open_lits, &open))?;
            let mut target = BTreeSet::from([def_f.clone()]);
            target.extend(formulas(full));
            let target = seq(target, BTreeSet::from([goal.clone()]));
            if l.truth_in(&wfm) == Some(TruthValue::T) {
                return weaken_to(replay_induction(d, &open_lits, l)?, &target);
            }
            let conflict = full
                .iter()
                .find(|g| {
                    defined.contains(&g.atom) && g.truth_in(&wfm) == Some(TruthValue::F)
                })
                .cloned()
                .ok_or_else(|| {
                    Error::contract(
                        "prover",
                        format!("`{goal}` does not follow in this extension"),
                    )
                })?;
            let comp = conflict.complement();
            let pi = replay_induction(d, &open_lits, &comp)?;
            let w = weaken_to(pi, &target.with_right(comp.formula()))?;
            conflict_literal_elim(&conflict, w)
        },
    )
}

/// Builds the right-branching obligations of a conjunction: proves
/// `X ⟶ c₁ ∧ … ∧ cₙ` (associated to the left) from leaf proofs of each
/// `X ⟶ cᵢ`.
fn conj_tree(
    items: &[Formula],
    leaf: &mut dyn FnMut(&Formula) -> Result<ProofTree, Error>,
) -> Result<ProofTree, Error> {
    let (last, init) = items.split_last().expect("conjunction is non-empty");
    if init.is_empty() {
        return leaf(last);
    }
    let lhs = conj_tree(init, leaf)?;
    let rhs = leaf(last)?;
    let lhs_f = lhs
        .root()
        .succedent
        .iter()
        .next()
        .expect("conjunct proofs have one succedent formula")
        .clone();
    let f = Formula::and(lhs_f, last.clone());
    let conclusion = seq(lhs.root().antecedent.clone(), BTreeSet::from([f.clone()]));
    node(
        RuleName::AndR,
        Params::formula(f),
        conclusion,
        vec![lhs, rhs],
    )
}

/// Certifies non-totality at the open assignment `gamma` (exactly the open
/// atoms of `d`, whose well-founded limit must be three-valued): proves
/// `D, Γ ⟶ false` by `def-nontotal` over the undecided split set.
pub(crate) fn refute_non_total(
    bounds: &Bounds,
    d: &Definition,
    gamma: &LitSet,
) -> Result<ProofTree, Error> {
    let def_f = Formula::Def(d.clone());
    let open = d.open();
    let wfm = wf_model(d, &to_interpretation(gamma, &open))?;
    if wfm.is_two_valued() {
        return Err(Error::contract(
            "prover",
            "the well-founded limit is two-valued",
        ));
    }
    let defined = d.defined();
    let k_lits: LitSet = from_interpretation(&wfm)
        .into_iter()
        .filter(|l| defined.contains(&l.atom))
        .collect();
    let vset: BTreeSet<Atom> = defined
        .iter()
        .filter(|a| wfm.get(a) == Some(TruthValue::U))
        .cloned()
        .collect();
    let d_dia = d.diamond(&vset);
    let def_dia_f = Formula::Def(d_dia.clone());

    let mut base_ante: BTreeSet<Formula> = formulas(gamma).collect();
    base_ante.extend(formulas(&k_lits));
    let mut concl_ante = base_ante.clone();
    concl_ante.insert(def_f.clone());
    let conclusion = seq(concl_ante, BTreeSet::new());

    let mut premises = Vec::new();
    for positive_diamonds in [true, false] {
        let mut gamma_star = gamma.clone();
        gamma_star.extend(k_lits.iter().cloned());
        for v in &vset {
            gamma_star.insert(Lit {
                atom: v.renamed_neg(),
                positive: positive_diamonds,
            });
        }
        let conjuncts: Vec<(Formula, Lit)> = vset
            .iter()
            .map(|v| {
                let lit = Lit {
                    atom: v.renamed_pos(),
                    positive: !positive_diamonds,
                };
                (lit.formula(), lit)
            })
            .collect();
        let items: Vec<Formula> = conjuncts.iter().map(|(f, _)| f.clone()).collect();
        let by_formula: BTreeMap<Formula, Lit> = conjuncts.into_iter().collect();
        premises.push(conj_tree(&items, &mut |c| {
            let lit = &by_formula[c];
            let proof = prove_literal_in_extensions(bounds, &d_dia, &gamma_star, lit)?;
            let mut want: BTreeSet<Formula> = formulas(&gamma_star).collect();
            want.insert(def_dia_f.clone());
            weaken_to(proof, &seq(want, BTreeSet::from([c.clone()])))
        })?);
    }

    let dn = node(
        RuleName::DefNontotal,
        Params {
            formula: Some(def_f.clone()),
            vset: Some(vset),
            ..Params::default()
        },
        conclusion.clone(),
        premises,
    )?;
    let mut cur = node(
        RuleName::WeakenR,
        Params::formula(Formula::False),
        conclusion.with_right(Formula::False),
        vec![dn],
    )?;
    for k in &k_lits {
        cur = cut_out(cur, k, |k| replay_induction(d, gamma, k))?;
    }
    Ok(cur)
}

/// Proves `D, Γ ⟶ l` at a full open assignment: by replaying the
/// induction when the limit is two-valued, and through `def-nontotal`
/// absurdity otherwise.
pub(crate) fn prove_entailed_literal(
    bounds: &Bounds,
    d: &Definition,
    gamma: &LitSet,
    l: &Lit,
) -> Result<ProofTree, Error> {
    let wfm = wf_model(d, &to_interpretation(gamma, &d.open()))?;
    if wfm.is_two_valued() {
        return replay_induction(d, gamma, l);
    }
    let pi = refute_non_total(bounds, d, gamma)?;
    let widened = node(
        RuleName::WeakenR,
        Params::formula(l.formula()),
        pi.root().with_right(l.formula()),
        vec![pi],
    )?;
    bot_elim(widened)
}

/// Proves `D, Γ ⟶ false` when the definition together with the context
/// literals is unsatisfiable.
pub(crate) fn refute_context(
    bounds: &Bounds,
    d: &Definition,
    gamma: &LitSet,
) -> Result<ProofTree, Error> {
    let def_f = Formula::Def(d.clone());
    let open = d.open();
    let defined = d.defined();
    extend_and_merge(
        bounds,
        &BTreeSet::from([def_f.clone()]),
        &open,
        gamma,
        &Formula::False,
        &mut |full| {
            let open_lits: LitSet = full
                .iter()
                .filter(|g| open.contains(&g.atom))
                .cloned()
                .collect();
            let wfm = wf_model(d, &to_interpretation(&open_lits, &open))?;
            let mut want = BTreeSet::from([def_f.clone()]);
            want.extend(formulas(full));
            let target = seq(want, BTreeSet::from([Formula::False]));
            if !wfm.is_two_valued() {
                return weaken_to(refute_non_total(bounds, d, &open_lits)?, &target);
            }
            let conflict = full
                .iter()
                .find(|g| {
                    defined.contains(&g.atom) && g.truth_in(&wfm) == Some(TruthValue::F)
                })
                .cloned()
                .ok_or_else(|| {
                    Error::contract("prover", "the context is satisfiable")
                })?;
            let comp = conflict.complement();
            let pi = prove_entailed_literal(bounds, d, &open_lits, &comp)?;
            let w = weaken_to(pi, &target.with_right(comp.formula()))?;
            conflict_literal_elim(&conflict, w)
        },
    )
}

/// Proves `D, Γ∖{l̄} ⟶ l` for an arbitrary literal entailed by the
/// definition under the context.
pub(crate) fn prove_any_literal(
    bounds: &Bounds,
    d: &Definition,
    gamma: &LitSet,
    l: &Lit,
) -> Result<ProofTree, Error> {
    if gamma.contains(l) {
        let mut ante: BTreeSet<Formula> = formulas(gamma).collect();
        ante.insert(Formula::Def(d.clone()));
        return axiom_for(&seq(ante, BTreeSet::from([l.formula()])));
    }
    let mut with_comp = gamma.clone();
    with_comp.insert(l.complement());
    let contradiction = bot_elim(refute_context(bounds, d, &with_comp)?)?;
    let atom_f = Formula::Atom(l.atom.clone());
    if l.positive {
        neg_left_to_right(&atom_f, contradiction)
    } else {
        pos_left_to_not_right(&atom_f, contradiction)
    }
}

/// Proves `D₁, …, Dₖ, Γ ⟶ false` when the definitions together with the
/// context literals are jointly unsatisfiable.
pub(crate) fn multi_def_bottom(
    bounds: &Bounds,
    defs: &[Definition],
    gamma: &LitSet,
) -> Result<ProofTree, Error> {
    if defs.is_empty() {
        return Err(Error::contract("prover", "no definitions to refute"));
    }
    let def_formulas: BTreeSet<Formula> =
        defs.iter().map(|d| Formula::Def(d.clone())).collect();
    let all_open: BTreeSet<Atom> = defs.iter().flat_map(|d| d.open()).collect();
    extend_and_merge(
        bounds,
        &def_formulas,
        &all_open,
        gamma,
        &Formula::False,
        &mut |full| {
            let mut want = def_formulas.clone();
            want.extend(formulas(full));
            let target = seq(want, BTreeSet::from([Formula::False]));
            let wfs: Vec<_> = defs
                .iter()
                .map(|d| {
                    let open = d.open();
                    let open_lits: LitSet = full
                        .iter()
                        .filter(|g| open.contains(&g.atom))
                        .cloned()
                        .collect();
                    wf_model(d, &to_interpretation(&open_lits, &open))
                })
                .collect::<Result<_, _>>()?;
            // A definition whose limit is not two-valued refutes on its own.
            if let Some(i) = wfs.iter().position(|w| !w.is_two_valued()) {
                return weaken_to(refute_context(bounds, &defs[i], full)?, &target);
            }
            // Two definitions disagreeing on a shared defined atom.
            for i in 0..defs.len() {
                for j in i + 1..defs.len() {
                    for a in defs[i].defined().intersection(&defs[j].defined()) {
                        let vi = wfs[i].get(a);
                        let vj = wfs[j].get(a);
                        if vi != vj {
                            let l = Lit {
                                atom: a.clone(),
                                positive: vi == Some(TruthValue::T),
                            };
                            let p0 = weaken_to(
                                prove_any_literal(bounds, &defs[i], full, &l)?,
                                &target.with_right(l.formula()),
                            )?;
                            let wj = weaken_to(
                                prove_any_literal(
                                    bounds,
                                    &defs[j],
                                    full,
                                    &l.complement(),
                                )?,
                                &target
                                    .with_left(l.formula())
                                    .with_right(l.complement().formula()),
                            )?;
                            let p1 = conflict_literal_elim(&l, wj)?;
                            return node(
                                RuleName::Cut,
                                Params::cut(l.formula()),
                                target,
                                vec![p0, p1],
                            );
                        }
                    }
                }
            }
            // A context literal contradicted by the definition it names.
            for (i, d) in defs.iter().enumerate() {
                let defined = d.defined();
                if let Some(lp) = full
                    .iter()
                    .find(|g| {
                        defined.contains(&g.atom)
                            && g.truth_in(&wfs[i]) == Some(TruthValue::F)
                    })
                    .cloned()
                {
                    let comp = lp.complement();
                    let w = weaken_to(
                        prove_any_literal(bounds, d, full, &comp)?,
                        &target.with_right(comp.formula()),
                    )?;
                    return conflict_literal_elim(&lp, w);
                }
            }
            Err(Error::contract("prover", "the leaf context is satisfiable"))
        },
    )
}

/// Proves an atomic leaf: atoms and definitions on the left, atoms on the
/// right, no shared atom. Validity of such a leaf means the definitions
/// refute the joint literal context, so the proof routes through absurdity.
pub(crate) fn prove_leaf(bounds: &Bounds, s: &Sequent) -> Result<ProofTree, Error> {
    let mut defs: Vec<Definition> = Vec::new();
    let mut gamma: LitSet = LitSet::new();
    for f in &s.antecedent {
        match f {
            Formula::Atom(a) => {
                gamma.insert(Lit::pos(a.clone()));
            }
            Formula::Def(d) => defs.push(d.clone()),
            other => {
                return Err(Error::contract(
                    "prover",
                    format!("unreduced formula `{other}` in a leaf"),
                ))
            }
        }
    }
    let mut succ_atoms: Vec<Atom> = Vec::new();
    for f in &s.succedent {
        match f {
            Formula::Atom(a) => {
                gamma.insert(Lit::neg(a.clone()));
                succ_atoms.push(a.clone());
            }
            other => {
                return Err(Error::contract(
                    "prover",
                    format!("unreduced formula `{other}` in a leaf"),
                ))
            }
        }
    }
    let mut cur = bot_elim(multi_def_bottom(bounds, &defs, &gamma)?)?;
    for q in succ_atoms {
        cur = neg_left_to_right(&Formula::Atom(q), cur)?;
    }
    if cur.root() != s {
        return Err(Error::contract(
            "prover",
            format!("leaf assembly produced `{}`, wanted `{s}`", cur.root()),
        ));
    }
    Ok(cur)
}
