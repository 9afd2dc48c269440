//! The well-founded construction: induction traces, step policies, and
//! unfounded sets.

use std::collections::BTreeSet;

use crate::error::Error;
use crate::semantics::{eval3, Interpretation, TruthValue};
use crate::syntax::{Atom, Definition};

/// One step of the well-founded construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WfStepKind {
    /// A defined atom whose body is already true is made true.
    DeriveTrue(Atom),
    /// An unfounded set of defined atoms is made false.
    DeriveFalse(BTreeSet<Atom>),
}

/// A step together with the interpretation it produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WfStep {
    pub kind: WfStepKind,
    pub after: Interpretation,
}

/// A terminal well-founded induction: the start interpretation (open atoms
/// fixed, defined atoms unknown), every step taken, and the limit, which no
/// further step can refine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WfTrace {
    pub start: Interpretation,
    pub steps: Vec<WfStep>,
    pub limit: Interpretation,
}

/// Chooses the next step of a well-founded induction. A policy must return
/// a step whenever one is legal; returning `None` asserts that the current
/// interpretation is terminal, which the engine verifies.
pub trait StepPolicy {
    fn choose(
        &mut self,
        d: &Definition,
        current: &Interpretation,
    ) -> Result<Option<WfStepKind>, Error>;
}

/// The built-in policy: make true the least defined atom whose body is
/// true; otherwise make false the greatest unfounded set.
#[derive(Debug, Clone, Copy, Default)]
pub struct DefaultPolicy;

impl StepPolicy for DefaultPolicy {
    fn choose(
        &mut self,
        d: &Definition,
        current: &Interpretation,
    ) -> Result<Option<WfStepKind>, Error> {
        let eligible = eligible_derive_true(d, current)?;
        if let Some(p) = eligible.into_iter().next() {
            return Ok(Some(WfStepKind::DeriveTrue(p)));
        }
        let gus = greatest_unfounded_set(d, current)?;
        if !gus.is_empty() {
            return Ok(Some(WfStepKind::DeriveFalse(gus)));
        }
        Ok(None)
    }
}

/// The defined atoms that are currently unknown and whose bodies evaluate
/// to true, in ascending order.
pub fn eligible_derive_true(
    d: &Definition,
    i: &Interpretation,
) -> Result<Vec<Atom>, Error> {
    let mut out = Vec::new();
    for (head, body) in d.rules() {
        if i.value(head)? == TruthValue::U && eval3(body, i)? == TruthValue::T {
            out.push(head.clone());
        }
    }
    Ok(out)
}

/// True if `set` is unfounded under `i`: a non-empty set of unknown defined
/// atoms such that after making all of them false, every member's body
/// evaluates to false.
pub fn is_unfounded(
    d: &Definition,
    i: &Interpretation,
    set: &BTreeSet<Atom>,
) -> Result<bool, Error> {
    if set.is_empty() {
        return Ok(false);
    }
    let defined = d.defined();
    for p in set {
        if !defined.contains(p) || i.value(p)? != TruthValue::U {
            return Ok(false);
        }
    }
    let assumed = i.assign_all(set, TruthValue::F);
    for p in set {
        let body = d.body(p).expect("members of the set are defined");
        if eval3(body, &assumed)? != TruthValue::F {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The greatest unfounded set under `i`: the union of all unfounded sets,
/// possibly empty. Computed as a greatest fixpoint, starting from all
/// unknown defined atoms and discarding atoms whose bodies are not false
/// under the candidate.
pub fn greatest_unfounded_set(
    d: &Definition,
    i: &Interpretation,
) -> Result<BTreeSet<Atom>, Error> {
    let mut candidate: BTreeSet<Atom> = BTreeSet::new();
    for (head, _) in d.rules() {
        if i.value(head)? == TruthValue::U {
            candidate.insert(head.clone());
        }
    }
    loop {
        let assumed = i.assign_all(&candidate, TruthValue::F);
        let mut next = BTreeSet::new();
        for p in &candidate {
            let body = d.body(p).expect("candidate atoms are defined");
            if eval3(body, &assumed)? == TruthValue::F {
                next.insert(p.clone());
            }
        }
        if next == candidate {
            return Ok(candidate);
        }
        candidate = next;
    }
}

/// Runs a well-founded induction for `d` from the open interpretation
/// `i_open` (a two-valued interpretation of exactly the open atoms), letting
/// `policy` pick each step, to a terminal interpretation. Every choice is
/// validated; an illegal or premature choice is an error.
pub fn wf_trace(
    d: &Definition,
    i_open: &Interpretation,
    policy: &mut dyn StepPolicy,
) -> Result<WfTrace, Error> {
    if i_open.domain() != d.open() {
        return Err(Error::contract(
            "wf_trace",
            "the initial interpretation must assign exactly the open atoms",
        ));
    }
    if !i_open.is_two_valued() {
        return Err(Error::contract(
            "wf_trace",
            "the initial interpretation must be two-valued",
        ));
    }
    let start = i_open
        .clone()
        .assign_all(&d.defined(), TruthValue::U);
    let mut current = start.clone();
    let mut steps = Vec::new();
    loop {
        match policy.choose(d, &current)? {
            Some(WfStepKind::DeriveTrue(p)) => {
                let body = d.body(&p).ok_or_else(|| {
                    Error::contract("wf_trace", format!("`{p}` is not a defined atom"))
                })?;
                if current.value(&p)? != TruthValue::U {
                    return Err(Error::contract(
                        "wf_trace",
                        format!("`{p}` is already decided"),
                    ));
                }
                if eval3(body, &current)? != TruthValue::T {
                    return Err(Error::contract(
                        "wf_trace",
                        format!("the body of `{p}` is not true"),
                    ));
                }
                current.set(p.clone(), TruthValue::T);
                steps.push(WfStep {
                    kind: WfStepKind::DeriveTrue(p),
                    after: current.clone(),
                });
            }
            Some(WfStepKind::DeriveFalse(set)) => {
                if !is_unfounded(d, &current, &set)? {
                    return Err(Error::contract(
                        "wf_trace",
                        "the chosen set is not unfounded",
                    ));
                }
                current = current.assign_all(&set, TruthValue::F);
                steps.push(WfStep {
                    kind: WfStepKind::DeriveFalse(set),
                    after: current.clone(),
                });
            }
            None => {
                if !eligible_derive_true(d, &current)?.is_empty()
                    || !greatest_unfounded_set(d, &current)?.is_empty()
                {
                    return Err(Error::contract(
                        "wf_trace",
                        "the policy stopped before the induction was terminal",
                    ));
                }
                return Ok(WfTrace {
                    start,
                    steps,
                    limit: current,
                });
            }
        }
    }
}

/// The well-founded limit of `d` from the open interpretation `i_open`,
/// using the built-in policy. All terminal inductions share this limit.
pub fn wf_model(d: &Definition, i_open: &Interpretation) -> Result<Interpretation, Error> {
    Ok(wf_trace(d, i_open, &mut DefaultPolicy)?.limit)
}

/// True if `d` is total for `i_open`: the well-founded limit is two-valued.
pub fn is_total_at(d: &Definition, i_open: &Interpretation) -> Result<bool, Error> {
    Ok(wf_model(d, i_open)?.is_two_valued())
}
