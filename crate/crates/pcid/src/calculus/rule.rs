//! The sequent-calculus rules: names, parameters, instances, and schema
//! validation.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::syntax::{Atom, Definition, Formula, Sequent};

/// The names of the calculus rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleName {
    AxiomId,
    AxiomBot,
    AxiomTop,
    WeakenL,
    WeakenR,
    ContractL,
    ContractR,
    Cut,
    NotL,
    NotR,
    AndL,
    AndR,
    OrL,
    OrR,
    DefR,
    DefL,
    DefNontotal,
    DefIntro,
}

impl RuleName {
    /// All rules, in catalog order.
    pub fn all() -> &'static [RuleName] {
        use RuleName::*;
        &[
            AxiomId, AxiomBot, AxiomTop, WeakenL, WeakenR, ContractL, ContractR, Cut, NotL,
            NotR, AndL, AndR, OrL, OrR, DefR, DefL, DefNontotal, DefIntro,
        ]
    }

    /// The surface name of the rule.
    pub fn as_str(self) -> &'static str {
        use RuleName::*;
        match self {
            AxiomId => "axiom-id",
            AxiomBot => "axiom-bot",
            AxiomTop => "axiom-top",
            WeakenL => "weaken-l",
            WeakenR => "weaken-r",
            ContractL => "contract-l",
            ContractR => "contract-r",
            Cut => "cut",
            NotL => "not-l",
            NotR => "not-r",
            AndL => "and-l",
            AndR => "and-r",
            OrL => "or-l",
            OrR => "or-r",
            DefR => "def-r",
            DefL => "def-l",
            DefNontotal => "def-nontotal",
            DefIntro => "def-intro",
        }
    }

    /// Looks a rule up by its surface name.
    pub fn parse(name: &str) -> Option<RuleName> {
        RuleName::all().iter().copied().find(|r| r.as_str() == name)
    }

    /// Which parameters the rule takes.
    pub fn param_spec(self) -> ParamSpec {
        use RuleName::*;
        let mut spec = ParamSpec::default();
        match self {
            AxiomBot | AxiomTop => {}
            Cut => spec.cutformula = true,
            AxiomId | WeakenL | WeakenR | ContractL | ContractR | NotL | NotR | AndL
            | AndR | OrL | OrR => spec.formula = true,
            DefR => {
                spec.formula = true;
                spec.atom = true;
            }
            DefL => {
                spec.formula = true;
                spec.atom = true;
                spec.uset = true;
            }
            DefNontotal => {
                spec.formula = true;
                spec.vset = true;
            }
            DefIntro => spec.formula = true,
        }
        spec
    }
}

impl fmt::Display for RuleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which parameters a rule requires (all others must be absent).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ParamSpec {
    pub formula: bool,
    pub atom: bool,
    pub uset: bool,
    pub vset: bool,
    pub cutformula: bool,
}

/// The parameters of a rule instance. Which fields are set depends on the
/// rule; `validate` rejects extra or missing parameters.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Params {
    /// The principal formula (for the definition rules, the definition).
    pub formula: Option<Formula>,
    /// The principal defined atom of `def-r` and `def-l`.
    pub atom: Option<Atom>,
    /// The unfolded set of `def-l`.
    pub uset: Option<BTreeSet<Atom>>,
    /// The split set of `def-nontotal`.
    pub vset: Option<BTreeSet<Atom>>,
    /// The cut formula.
    pub cutformula: Option<Formula>,
}

impl Params {
    /// Parameters consisting of a principal formula only.
    pub fn formula(f: Formula) -> Params {
        Params {
            formula: Some(f),
            ..Params::default()
        }
    }

    /// Parameters for a cut.
    pub fn cut(f: Formula) -> Params {
        Params {
            cutformula: Some(f),
            ..Params::default()
        }
    }
}

/// One rule application: the rule, its parameters, the conclusion, and the
/// premises in rule order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleInstance {
    pub rule: RuleName,
    pub params: Params,
    pub conclusion: Sequent,
    pub premises: Vec<Sequent>,
}

/// Why a rule application is not an instance of its schema.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuleError {
    #[error("unknown rule `{0}`")]
    UnknownRule(String),

    #[error("arity mismatch for {rule}: expected {expected} premises, found {found}")]
    Arity {
        rule: RuleName,
        expected: usize,
        found: usize,
    },

    #[error("malformed params for {rule}: {detail}")]
    MalformedParams { rule: RuleName, detail: String },

    #[error("schema mismatch for {rule}: {detail}")]
    SchemaMismatch { rule: RuleName, detail: String },
}

impl RuleInstance {
    /// Builds and validates a rule instance.
    pub fn new(
        rule: RuleName,
        params: Params,
        conclusion: Sequent,
        premises: Vec<Sequent>,
    ) -> Result<RuleInstance, RuleError> {
        let instance = RuleInstance {
            rule,
            params,
            conclusion,
            premises,
        };
        instance.validate()?;
        Ok(instance)
    }

    /// Checks that the instance matches its rule schema exactly: parameter
    /// shape, premise count, premise sequents, and side conditions.
    pub fn validate(&self) -> Result<(), RuleError> {
        self.check_param_shape()?;
        match self.rule {
            RuleName::AxiomId => self.check_axiom_id(),
            RuleName::AxiomBot => self.check_axiom_const(Formula::False),
            RuleName::AxiomTop => self.check_axiom_const(Formula::True),
            RuleName::WeakenL => self.check_weaken(true),
            RuleName::WeakenR => self.check_weaken(false),
            RuleName::ContractL => self.check_contract(true),
            RuleName::ContractR => self.check_contract(false),
            RuleName::Cut => self.check_cut(),
            RuleName::NotL => self.check_not(true),
            RuleName::NotR => self.check_not(false),
            RuleName::AndL => self.check_and_l(),
            RuleName::AndR => self.check_and_r(),
            RuleName::OrL => self.check_or_l(),
            RuleName::OrR => self.check_or_r(),
            RuleName::DefR => self.check_def_r(),
            RuleName::DefL => self.check_def_l(),
            RuleName::DefNontotal => self.check_def_nontotal(),
            RuleName::DefIntro => self.check_def_intro(),
        }
    }

    fn check_param_shape(&self) -> Result<(), RuleError> {
        let spec = self.rule.param_spec();
        let fields: [(&str, bool, bool); 5] = [
            ("formula", spec.formula, self.params.formula.is_some()),
            ("atom", spec.atom, self.params.atom.is_some()),
            ("uset", spec.uset, self.params.uset.is_some()),
            ("vset", spec.vset, self.params.vset.is_some()),
            (
                "cutformula",
                spec.cutformula,
                self.params.cutformula.is_some(),
            ),
        ];
        for (name, needed, present) in fields {
            if needed && !present {
                return Err(self.malformed(format!("missing `{name}` parameter")));
            }
            if !needed && present {
                return Err(self.malformed(format!("unexpected `{name}` parameter")));
            }
        }
        Ok(())
    }

    fn malformed(&self, detail: impl Into<String>) -> RuleError {
        RuleError::MalformedParams {
            rule: self.rule,
            detail: detail.into(),
        }
    }

    fn mismatch(&self, detail: impl Into<String>) -> RuleError {
        RuleError::SchemaMismatch {
            rule: self.rule,
            detail: detail.into(),
        }
    }

    fn check_arity(&self, expected: usize) -> Result<(), RuleError> {
        if self.premises.len() != expected {
            return Err(RuleError::Arity {
                rule: self.rule,
                expected,
                found: self.premises.len(),
            });
        }
        Ok(())
    }

    fn principal(&self) -> &Formula {
        self.params
            .formula
            .as_ref()
            .expect("param shape was checked")
    }

    /// The principal formula read as a definition.
    fn principal_definition(&self) -> Result<&Definition, RuleError> {
        match self.principal() {
            Formula::Def(d) => Ok(d),
            other => Err(self.malformed(format!(
                "the formula parameter must be a definition, found `{other}`"
            ))),
        }
    }

    /// Compares the actual premises against candidate premise vectors; the
    /// candidates differ only in whether principal formulas stay in the
    /// context. Reports the first candidate on failure.
    fn match_premises(&self, candidates: &[Vec<Sequent>]) -> Result<(), RuleError> {
        debug_assert!(!candidates.is_empty());
        for cand in candidates {
            if self.premises == *cand {
                return Ok(());
            }
        }
        let expected = &candidates[0];
        for (i, (found, want)) in self.premises.iter().zip(expected.iter()).enumerate() {
            if found != want {
                return Err(self.mismatch(format!(
                    "premise {} is `{found}`, required `{want}`",
                    i + 1
                )));
            }
        }
        Err(self.mismatch("premises do not match the schema"))
    }

    fn check_axiom_id(&self) -> Result<(), RuleError> {
        self.check_arity(0)?;
        let a = self.principal();
        if !self.conclusion.antecedent.contains(a) || !self.conclusion.succedent.contains(a) {
            return Err(self.mismatch(format!(
                "`{a}` must occur on both sides of the conclusion"
            )));
        }
        Ok(())
    }

    fn check_axiom_const(&self, marker: Formula) -> Result<(), RuleError> {
        self.check_arity(0)?;
        let present = match self.rule {
            RuleName::AxiomBot => self.conclusion.antecedent.contains(&marker),
            _ => self.conclusion.succedent.contains(&marker),
        };
        if !present {
            return Err(self.mismatch(format!(
                "`{marker}` must occur in the conclusion's {}",
                if self.rule == RuleName::AxiomBot {
                    "antecedent"
                } else {
                    "succedent"
                }
            )));
        }
        Ok(())
    }

    fn check_weaken(&self, left: bool) -> Result<(), RuleError> {
        self.check_arity(1)?;
        let a = self.principal().clone();
        let side = if left {
            &self.conclusion.antecedent
        } else {
            &self.conclusion.succedent
        };
        if !side.contains(&a) {
            return Err(self.mismatch(format!("`{a}` must occur in the conclusion")));
        }
        let candidates = if left {
            vec![
                vec![self.conclusion.without_left(&a)],
                vec![self.conclusion.clone()],
            ]
        } else {
            vec![
                vec![self.conclusion.without_right(&a)],
                vec![self.conclusion.clone()],
            ]
        };
        self.match_premises(&candidates)
    }

    fn check_contract(&self, left: bool) -> Result<(), RuleError> {
        self.check_arity(1)?;
        let a = self.principal();
        let side = if left {
            &self.conclusion.antecedent
        } else {
            &self.conclusion.succedent
        };
        if !side.contains(a) {
            return Err(self.mismatch(format!("`{a}` must occur in the conclusion")));
        }
        self.match_premises(&[vec![self.conclusion.clone()]])
    }

    fn check_cut(&self) -> Result<(), RuleError> {
        self.check_arity(2)?;
        let a = self
            .params
            .cutformula
            .clone()
            .expect("param shape was checked");
        let p0 = self.conclusion.with_right(a.clone());
        let p1 = self.conclusion.with_left(a);
        self.match_premises(&[vec![p0, p1]])
    }

    fn check_not(&self, left: bool) -> Result<(), RuleError> {
        self.check_arity(1)?;
        let a = self.principal().clone();
        let neg = Formula::not(a.clone());
        let principal_side = if left {
            &self.conclusion.antecedent
        } else {
            &self.conclusion.succedent
        };
        if !principal_side.contains(&neg) {
            return Err(self.mismatch(format!(
                "`{neg}` must occur in the conclusion's {}",
                if left { "antecedent" } else { "succedent" }
            )));
        }
        let candidates = if left {
            vec![
                vec![self.conclusion.without_left(&neg).with_right(a.clone())],
                vec![self.conclusion.with_right(a)],
            ]
        } else {
            vec![
                vec![self.conclusion.without_right(&neg).with_left(a.clone())],
                vec![self.conclusion.with_left(a)],
            ]
        };
        self.match_premises(&candidates)
    }

    /// The conjuncts of the principal formula, which must be a conjunction.
    fn principal_and(&self) -> Result<(Formula, Formula), RuleError> {
        match self.principal() {
            Formula::And(a, b) => Ok((*a.clone(), *b.clone())),
            other => Err(self.malformed(format!(
                "the formula parameter must be a conjunction, found `{other}`"
            ))),
        }
    }

    /// The disjuncts of the principal formula, which must be a disjunction.
    fn principal_or(&self) -> Result<(Formula, Formula), RuleError> {
        match self.principal() {
            Formula::Or(a, b) => Ok((*a.clone(), *b.clone())),
            other => Err(self.malformed(format!(
                "the formula parameter must be a disjunction, found `{other}`"
            ))),
        }
    }

    fn check_and_l(&self) -> Result<(), RuleError> {
        self.check_arity(1)?;
        let (a, b) = self.principal_and()?;
        let principal = self.principal().clone();
        if !self.conclusion.antecedent.contains(&principal) {
            return Err(self.mismatch(format!("`{principal}` must occur in the antecedent")));
        }
        let add = |s: Sequent| s.with_left(a.clone()).with_left(b.clone());
        self.match_premises(&[
            vec![add(self.conclusion.without_left(&principal))],
            vec![add(self.conclusion.clone())],
        ])
    }

    fn check_and_r(&self) -> Result<(), RuleError> {
        self.check_arity(2)?;
        let (a, b) = self.principal_and()?;
        let principal = self.principal().clone();
        if !self.conclusion.succedent.contains(&principal) {
            return Err(self.mismatch(format!("`{principal}` must occur in the succedent")));
        }
        let removed = self.conclusion.without_right(&principal);
        self.match_premises(&[
            vec![removed.with_right(a.clone()), removed.with_right(b.clone())],
            vec![
                self.conclusion.with_right(a),
                self.conclusion.with_right(b),
            ],
        ])
    }

    fn check_or_l(&self) -> Result<(), RuleError> {
        self.check_arity(2)?;
        let (a, b) = self.principal_or()?;
        let principal = self.principal().clone();
        if !self.conclusion.antecedent.contains(&principal) {
            return Err(self.mismatch(format!("`{principal}` must occur in the antecedent")));
        }
        let removed = self.conclusion.without_left(&principal);
        self.match_premises(&[
            vec![removed.with_left(a.clone()), removed.with_left(b.clone())],
            vec![self.conclusion.with_left(a), self.conclusion.with_left(b)],
        ])
    }

    fn check_or_r(&self) -> Result<(), RuleError> {
        self.check_arity(1)?;
        let (a, b) = self.principal_or()?;
        let principal = self.principal().clone();
        if !self.conclusion.succedent.contains(&principal) {
            return Err(self.mismatch(format!("`{principal}` must occur in the succedent")));
        }
        let add = |s: Sequent| s.with_right(a.clone()).with_right(b.clone());
        self.match_premises(&[
            vec![add(self.conclusion.without_right(&principal))],
            vec![add(self.conclusion.clone())],
        ])
    }

    fn principal_atom(&self) -> &Atom {
        self.params.atom.as_ref().expect("param shape was checked")
    }

    fn check_def_r(&self) -> Result<(), RuleError> {
        self.check_arity(1)?;
        let d = self.principal_definition()?.clone();
        let p = self.principal_atom().clone();
        let body = d.body(&p).cloned().ok_or_else(|| {
            self.mismatch(format!("`{p}` is not defined by the definition"))
        })?;
        let def_formula = Formula::Def(d);
        let p_formula = Formula::Atom(p);
        if !self.conclusion.antecedent.contains(&def_formula) {
            return Err(self.mismatch("the definition must occur in the antecedent"));
        }
        if !self.conclusion.succedent.contains(&p_formula) {
            return Err(self.mismatch("the defined atom must occur in the succedent"));
        }
        let mut candidates = Vec::new();
        for ante in [
            self.conclusion.without_left(&def_formula).antecedent,
            self.conclusion.antecedent.clone(),
        ] {
            for succ in [
                self.conclusion.without_right(&p_formula).succedent,
                self.conclusion.succedent.clone(),
            ] {
                let mut premise = Sequent {
                    antecedent: ante.clone(),
                    succedent: succ,
                };
                premise.succedent.insert(body.clone());
                candidates.push(vec![premise]);
            }
        }
        self.match_premises(&candidates)
    }

    /// Checks that none of `atoms` occurs anywhere in the conclusion.
    fn check_freshness(&self, atoms: &BTreeSet<Atom>) -> Result<(), RuleError> {
        let used = self.conclusion.atoms();
        for a in atoms {
            if used.contains(a) {
                return Err(self.mismatch(format!(
                    "renamed atom `{a}` already occurs in the conclusion"
                )));
            }
        }
        Ok(())
    }

    fn check_def_l(&self) -> Result<(), RuleError> {
        let d = self.principal_definition()?.clone();
        let p = self.principal_atom().clone();
        let uset = self.params.uset.clone().expect("param shape was checked");
        if uset.is_empty() {
            return Err(self.malformed("the unfolded set must be non-empty"));
        }
        if !uset.iter().all(|q| d.defined().contains(q)) {
            return Err(self.mismatch("the unfolded set must contain defined atoms only"));
        }
        if !uset.contains(&p) {
            return Err(self.mismatch(format!("`{p}` must belong to the unfolded set")));
        }
        self.check_arity(uset.len())?;
        let def_formula = Formula::Def(d.clone());
        let p_formula = Formula::Atom(p.clone());
        if !self.conclusion.antecedent.contains(&def_formula) {
            return Err(self.mismatch("the definition must occur in the antecedent"));
        }
        if !self.conclusion.antecedent.contains(&p_formula) {
            return Err(self.mismatch("the principal atom must occur in the antecedent"));
        }
        let renamed: BTreeSet<Atom> = uset.iter().map(Atom::renamed_pos).collect();
        self.check_freshness(&renamed)?;

        let neg_renamed: Vec<Formula> = uset
            .iter()
            .map(|q| Formula::not(Formula::Atom(q.renamed_pos())))
            .collect();
        let mut candidates = Vec::new();
        for drop_p in [true, false] {
            for drop_d in [true, false] {
                let mut gamma = self.conclusion.clone();
                if drop_p {
                    gamma = gamma.without_left(&p_formula);
                }
                if drop_d {
                    gamma = gamma.without_left(&def_formula);
                }
                let premises: Vec<Sequent> = uset
                    .iter()
                    .map(|q| {
                        let body = d.body(q).expect("uset atoms are defined");
                        let unfolded = Formula::not(body.rename_pos(&uset));
                        let mut s = gamma.clone();
                        for nf in &neg_renamed {
                            s.antecedent.insert(nf.clone());
                        }
                        s.succedent.insert(unfolded);
                        s
                    })
                    .collect();
                candidates.push(premises);
            }
        }
        self.match_premises(&candidates)
    }

    fn check_def_nontotal(&self) -> Result<(), RuleError> {
        self.check_arity(2)?;
        let d = self.principal_definition()?.clone();
        let vset = self.params.vset.clone().expect("param shape was checked");
        if vset.is_empty() {
            return Err(self.malformed("the split set must be non-empty"));
        }
        if !vset.iter().all(|q| d.defined().contains(q)) {
            return Err(self.mismatch("the split set must contain defined atoms only"));
        }
        let def_formula = Formula::Def(d.clone());
        if !self.conclusion.antecedent.contains(&def_formula) {
            return Err(self.mismatch("the definition must occur in the antecedent"));
        }
        let mut fresh: BTreeSet<Atom> = vset.iter().map(Atom::renamed_pos).collect();
        fresh.extend(vset.iter().map(Atom::renamed_neg));
        self.check_freshness(&fresh)?;

        let d_dia = Formula::Def(d.diamond(&vset));
        let conj_neg = Formula::conj_all(
            vset.iter()
                .map(|q| Formula::not(Formula::Atom(q.renamed_pos()))),
        );
        let conj_pos = Formula::conj_all(vset.iter().map(|q| Formula::Atom(q.renamed_pos())));
        let mut candidates = Vec::new();
        for gamma in [
            self.conclusion.without_left(&def_formula),
            self.conclusion.clone(),
        ] {
            let mut p0 = gamma.clone().with_left(d_dia.clone());
            let mut p1 = gamma.with_left(d_dia.clone());
            for q in &vset {
                p0 = p0.with_left(Formula::Atom(q.renamed_neg()));
                p1 = p1.with_left(Formula::not(Formula::Atom(q.renamed_neg())));
            }
            p0 = p0.with_right(conj_neg.clone());
            p1 = p1.with_right(conj_pos.clone());
            candidates.push(vec![p0, p1]);
        }
        self.match_premises(&candidates)
    }

    fn check_def_intro(&self) -> Result<(), RuleError> {
        let d = self.principal_definition()?.clone();
        self.check_arity(d.len())?;
        let def_formula = Formula::Def(d.clone());
        if !self.conclusion.succedent.contains(&def_formula) {
            return Err(self.mismatch("the definition must occur in the succedent"));
        }
        let primed: BTreeSet<Atom> = d.defined().iter().map(Atom::primed).collect();
        self.check_freshness(&primed)?;

        let d_prime = Formula::Def(d.primed());
        let mut candidates = Vec::new();
        for sigma in [
            self.conclusion.without_right(&def_formula),
            self.conclusion.clone(),
        ] {
            let premises: Vec<Sequent> = d
                .defined()
                .iter()
                .map(|p| {
                    let equiv = Formula::iff(
                        Formula::Atom(p.primed()),
                        Formula::Atom(p.clone()),
                    );
                    sigma
                        .clone()
                        .with_left(d_prime.clone())
                        .with_right(equiv)
                })
                .collect();
            candidates.push(premises);
        }
        self.match_premises(&candidates)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn atom(name: &str) -> Atom {
        Atom::user(name).unwrap()
    }

    fn at(name: &str) -> Formula {
        Formula::Atom(atom(name))
    }

    #[test]
    fn rule_names_round_trip() {
        for rule in RuleName::all() {
            assert_eq!(RuleName::parse(rule.as_str()), Some(*rule));
        }
        assert_eq!(RuleName::parse("def-x"), None);
    }

    #[test]
    fn axiom_id_requires_shared_formula() {
        let ok = RuleInstance::new(
            RuleName::AxiomId,
            Params::formula(at("o")),
            Sequent::new(vec![at("o")], vec![at("o")]),
            vec![],
        );
        assert!(ok.is_ok());
        let bad = RuleInstance::new(
            RuleName::AxiomId,
            Params::formula(at("o")),
            Sequent::new(vec![at("o")], vec![at("p")]),
            vec![],
        );
        assert!(matches!(bad, Err(RuleError::SchemaMismatch { .. })));
    }

    #[test]
    fn params_are_checked_for_shape() {
        let extra = RuleInstance::new(
            RuleName::AxiomBot,
            Params::formula(at("o")),
            Sequent::new(vec![Formula::False], vec![]),
            vec![],
        );
        assert!(matches!(extra, Err(RuleError::MalformedParams { .. })));
        let missing = RuleInstance::new(
            RuleName::NotL,
            Params::default(),
            Sequent::new(vec![Formula::not(at("o"))], vec![at("o")]),
            vec![Sequent::new(vec![], vec![at("o")])],
        );
        assert!(matches!(missing, Err(RuleError::MalformedParams { .. })));
    }

    #[test]
    fn not_l_moves_the_formula_right() {
        let conclusion = Sequent::new(vec![Formula::not(at("q")), at("q")], vec![]);
        let premise = Sequent::new(vec![at("q")], vec![at("q")]);
        assert!(RuleInstance::new(
            RuleName::NotL,
            Params::formula(at("q")),
            conclusion.clone(),
            vec![premise],
        )
        .is_ok());
        let wrong = Sequent::new(vec![at("q")], vec![at("r")]);
        assert!(RuleInstance::new(
            RuleName::NotL,
            Params::formula(at("q")),
            conclusion,
            vec![wrong],
        )
        .is_err());
    }

    #[test]
    fn cut_premises_are_fixed_by_the_conclusion() {
        let conclusion = Sequent::new(vec![at("g")], vec![at("d")]);
        let p0 = conclusion.with_right(at("a"));
        let p1 = conclusion.with_left(at("a"));
        assert!(RuleInstance::new(
            RuleName::Cut,
            Params::cut(at("a")),
            conclusion.clone(),
            vec![p0.clone(), p1.clone()],
        )
        .is_ok());
        // Swapped premise order is a different (wrong) instance.
        let swapped = RuleInstance::new(
            RuleName::Cut,
            Params::cut(at("a")),
            conclusion,
            vec![p1, p0],
        );
        assert!(swapped.is_err());
    }

    #[test]
    fn and_r_arity_is_enforced() {
        let conclusion = Sequent::new(vec![], vec![Formula::and(at("a"), at("b"))]);
        let one = RuleInstance::new(
            RuleName::AndR,
            Params::formula(Formula::and(at("a"), at("b"))),
            conclusion,
            vec![Sequent::new(vec![], vec![at("a")])],
        );
        assert!(matches!(
            one,
            Err(RuleError::Arity {
                expected: 2,
                found: 1,
                ..
            })
        ));
    }

    #[test]
    fn def_l_requires_renaming() {
        // { p <- true. } with the unfolded set {p}: the premise must rename
        // the positive occurrences of p, and the renamed atom must be fresh.
        let d = Definition::normalize(vec![(atom("p"), Formula::True)]).unwrap();
        let conclusion = Sequent::new(vec![at("p"), Formula::Def(d.clone())], vec![]);
        let uset: BTreeSet<Atom> = [atom("p")].into_iter().collect();
        let params = Params {
            formula: Some(Formula::Def(d.clone())),
            atom: Some(atom("p")),
            uset: Some(uset.clone()),
            ..Params::default()
        };

        let good_premise = Sequent::new(
            vec![Formula::not(Formula::Atom(atom("p").renamed_pos()))],
            vec![Formula::not(Formula::True)],
        );
        assert!(RuleInstance::new(
            RuleName::DefL,
            params.clone(),
            conclusion.clone(),
            vec![good_premise],
        )
        .is_ok());

        // The unsound un-renamed variant must be rejected.
        let unrenamed = Sequent::new(
            vec![Formula::not(at("p")), at("p")],
            vec![Formula::not(Formula::True)],
        );
        let err = RuleInstance::new(RuleName::DefL, params, conclusion, vec![unrenamed])
            .unwrap_err();
        assert!(matches!(err, RuleError::SchemaMismatch { .. }));
        assert!(err.to_string().contains("schema mismatch"));
    }

    #[test]
    fn def_l_rejects_stale_renamed_atoms() {
        // If p__r already occurs in the conclusion, the renaming is not fresh.
        let d = Definition::normalize(vec![(atom("p"), Formula::True)]).unwrap();
        let conclusion = Sequent::new(
            vec![
                at("p"),
                Formula::Def(d.clone()),
                Formula::Atom(atom("p").renamed_pos()),
            ],
            vec![],
        );
        let params = Params {
            formula: Some(Formula::Def(d)),
            atom: Some(atom("p")),
            uset: Some([atom("p")].into_iter().collect()),
            ..Params::default()
        };
        let premise = Sequent::new(
            vec![
                Formula::not(Formula::Atom(atom("p").renamed_pos())),
                Formula::Atom(atom("p").renamed_pos()),
            ],
            vec![Formula::not(Formula::True)],
        );
        let err = RuleInstance::new(RuleName::DefL, params, conclusion, vec![premise])
            .unwrap_err();
        assert!(err.to_string().contains("occurs in the conclusion"));
    }

    #[test]
    fn def_r_unfolds_one_rule() {
        let d = Definition::normalize(vec![
            (atom("p"), at("o")),
            (atom("q"), Formula::and(at("q"), at("p"))),
        ])
        .unwrap();
        let conclusion = Sequent::new(vec![at("o"), Formula::Def(d.clone())], vec![at("p")]);
        let premise = Sequent::new(vec![at("o")], vec![at("o")]);
        let params = Params {
            formula: Some(Formula::Def(d)),
            atom: Some(atom("p")),
            ..Params::default()
        };
        assert!(RuleInstance::new(RuleName::DefR, params, conclusion, vec![premise]).is_ok());
    }

    #[test]
    fn def_intro_premises_follow_head_order() {
        let d = Definition::normalize(vec![
            (atom("b"), at("o")),
            (atom("a"), at("o")),
        ])
        .unwrap();
        let conclusion = Sequent::new(vec![], vec![Formula::Def(d.clone())]);
        let d_prime = Formula::Def(d.primed());
        let premise_for = |name: &str| {
            Sequent::new(
                vec![d_prime.clone()],
                vec![Formula::iff(
                    Formula::Atom(atom(name).primed()),
                    at(name),
                )],
            )
        };
        let params = Params::formula(Formula::Def(d));
        assert!(RuleInstance::new(
            RuleName::DefIntro,
            params.clone(),
            conclusion.clone(),
            vec![premise_for("a"), premise_for("b")],
        )
        .is_ok());
        assert!(RuleInstance::new(
            RuleName::DefIntro,
            params,
            conclusion,
            vec![premise_for("b"), premise_for("a")],
        )
        .is_err());
    }
}
