//! Shared deterministic generators for the test suites. Everything is
//! seeded explicitly so failures reproduce bit-identically.

#![allow(dead_code)]

use std::collections::BTreeSet;

use pcid::semantics::{Interpretation, TruthValue};
use pcid::syntax::{Atom, Definition, Formula, Sequent};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn atom(name: &str) -> Atom {
    Atom::user(name).expect("test atom name is valid")
}

pub fn atoms(names: &[&str]) -> Vec<Atom> {
    names.iter().map(|n| atom(n)).collect()
}

fn pick<'a, T>(rng: &mut ChaCha8Rng, items: &'a [T]) -> &'a T {
    &items[rng.random_range(0..items.len())]
}

/// A random definition-free formula over `vocab` with connective depth at
/// most `depth`.
pub fn gen_pc(rng: &mut ChaCha8Rng, vocab: &[Atom], depth: usize) -> Formula {
    if depth == 0 || rng.random_range(0..10) < 3 {
        return match rng.random_range(0..10) {
            0 => Formula::True,
            1 => Formula::False,
            _ => Formula::Atom(pick(rng, vocab).clone()),
        };
    }
    match rng.random_range(0..3) {
        0 => Formula::not(gen_pc(rng, vocab, depth - 1)),
        1 => Formula::and(gen_pc(rng, vocab, depth - 1), gen_pc(rng, vocab, depth - 1)),
        _ => Formula::or(gen_pc(rng, vocab, depth - 1), gen_pc(rng, vocab, depth - 1)),
    }
}

/// A random definition with the given heads; bodies draw on `vocab`.
pub fn gen_definition(
    rng: &mut ChaCha8Rng,
    heads: &[Atom],
    vocab: &[Atom],
    depth: usize,
) -> Definition {
    let rules = heads
        .iter()
        .map(|h| (h.clone(), gen_pc(rng, vocab, depth)))
        .collect();
    Definition::normalize(rules).expect("generated bodies are definition-free")
}

/// A random three-valued (or two-valued) interpretation of `vocab`.
pub fn gen_interp(
    rng: &mut ChaCha8Rng,
    vocab: &BTreeSet<Atom>,
    two_valued: bool,
) -> Interpretation {
    Interpretation::from_pairs(vocab.iter().map(|a| {
        let v = if two_valued {
            if rng.random_bool(0.5) {
                TruthValue::T
            } else {
                TruthValue::F
            }
        } else {
            match rng.random_range(0..3) {
                0 => TruthValue::F,
                1 => TruthValue::U,
                _ => TruthValue::T,
            }
        };
        (a.clone(), v)
    }))
}

/// A random formula that may contain definitions as subformulas.
pub fn gen_pcid(
    rng: &mut ChaCha8Rng,
    vocab: &[Atom],
    depth: usize,
    defs_left: &mut usize,
) -> Formula {
    if *defs_left > 0 && rng.random_range(0..10) < 3 {
        *defs_left -= 1;
        let n_heads = rng.random_range(1..=2.min(vocab.len()));
        let mut heads = BTreeSet::new();
        while heads.len() < n_heads {
            heads.insert(pick(rng, vocab).clone());
        }
        let heads: Vec<Atom> = heads.into_iter().collect();
        let body_depth = depth.min(2);
        return Formula::Def(gen_definition(rng, &heads, vocab, body_depth));
    }
    if depth == 0 || rng.random_range(0..10) < 3 {
        return match rng.random_range(0..12) {
            0 => Formula::True,
            1 => Formula::False,
            _ => Formula::Atom(pick(rng, vocab).clone()),
        };
    }
    match rng.random_range(0..3) {
        0 => Formula::not(gen_pcid(rng, vocab, depth - 1, defs_left)),
        1 => Formula::and(
            gen_pcid(rng, vocab, depth - 1, defs_left),
            gen_pcid(rng, vocab, depth - 1, defs_left),
        ),
        _ => Formula::or(
            gen_pcid(rng, vocab, depth - 1, defs_left),
            gen_pcid(rng, vocab, depth - 1, defs_left),
        ),
    }
}

/// A random sequent over at most 5 atoms with at most 2 definitions and
/// formula depth at most 3.
pub fn gen_sequent(rng: &mut ChaCha8Rng, vocab: &[Atom]) -> Sequent {
    let n_atoms = rng.random_range(1..=vocab.len().min(5));
    let vocab: Vec<Atom> = vocab[..n_atoms].to_vec();
    let mut defs_left = 2usize;
    let n_ante = rng.random_range(0..=2);
    let n_succ = rng.random_range(0..=2);
    let ante: Vec<Formula> = (0..n_ante)
        .map(|_| gen_pcid(rng, &vocab, 3, &mut defs_left))
        .collect();
    let succ: Vec<Formula> = (0..n_succ)
        .map(|_| gen_pcid(rng, &vocab, 3, &mut defs_left))
        .collect();
    Sequent::new(ante, succ)
}

/// A random theory: a few statements mixing bare definitions and formulas.
pub fn gen_theory(rng: &mut ChaCha8Rng, vocab: &[Atom]) -> Vec<Formula> {
    let n = rng.random_range(1..=3);
    let mut defs_left = 2usize;
    (0..n)
        .map(|_| {
            if defs_left > 0 && rng.random_bool(0.5) {
                defs_left -= 1;
                let n_heads = rng.random_range(1..=2.min(vocab.len()));
                let mut heads = BTreeSet::new();
                while heads.len() < n_heads {
                    heads.insert(pick(rng, vocab).clone());
                }
                let heads: Vec<Atom> = heads.into_iter().collect();
                Formula::Def(gen_definition(rng, &heads, vocab, 2))
            } else {
                gen_pc(rng, vocab, 3)
            }
        })
        .collect()
}

/// A body for a stratified definition: atoms of the same stratum occur only
/// positively; lower-stratum and open atoms occur with either sign, but only
/// directly under the negation.
fn gen_stratified_body(
    rng: &mut ChaCha8Rng,
    same: &[Atom],
    lower: &[Atom],
    depth: usize,
) -> Formula {
    if depth == 0 || rng.random_range(0..10) < 4 {
        let leaf = rng.random_range(0..10);
        if leaf == 0 {
            return Formula::True;
        }
        if leaf == 1 {
            return Formula::False;
        }
        let use_lower = !lower.is_empty() && (same.is_empty() || rng.random_bool(0.5));
        if use_lower {
            let a = Formula::Atom(pick(rng, lower).clone());
            return if rng.random_bool(0.5) { Formula::not(a) } else { a };
        }
        if same.is_empty() {
            return Formula::True;
        }
        return Formula::Atom(pick(rng, same).clone());
    }
    if rng.random_bool(0.5) {
        Formula::and(
            gen_stratified_body(rng, same, lower, depth - 1),
            gen_stratified_body(rng, same, lower, depth - 1),
        )
    } else {
        Formula::or(
            gen_stratified_body(rng, same, lower, depth - 1),
            gen_stratified_body(rng, same, lower, depth - 1),
        )
    }
}

/// A random stratified definition over up to four defined atoms in up to
/// three strata, with up to two open atoms at the bottom.
pub fn gen_stratified(rng: &mut ChaCha8Rng) -> Definition {
    let defined = atoms(&["p", "q", "r", "s"]);
    let open = atoms(&["o1", "o2"]);
    let n_defined = rng.random_range(1..=defined.len());
    let n_strata = rng.random_range(1..=3.min(n_defined));
    // Assign each defined atom to a stratum; stratum 0 may also use the
    // open atoms, every stratum may use lower strata under negation.
    let mut strata: Vec<Vec<Atom>> = vec![Vec::new(); n_strata];
    for (i, a) in defined[..n_defined].iter().enumerate() {
        let s = if i < n_strata { i } else { rng.random_range(0..n_strata) };
        strata[s].push(a.clone());
    }
    let n_open = rng.random_range(0..=open.len());
    let mut lower: Vec<Atom> = open[..n_open].to_vec();
    let mut rules = Vec::new();
    for stratum in &strata {
        for head in stratum {
            let depth = rng.random_range(1..=3);
            rules.push((
                head.clone(),
                gen_stratified_body(rng, stratum, &lower, depth),
            ));
        }
        lower.extend(stratum.iter().cloned());
    }
    Definition::normalize(rules).expect("stratified bodies are definition-free")
}
