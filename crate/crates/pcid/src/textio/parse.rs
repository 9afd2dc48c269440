//! Recursive-descent parsers for formulas, theories, sequents, and proofs.

use std::collections::BTreeSet;

use crate::calculus::{Params, ProofTree, RuleInstance, RuleName};
use crate::syntax::{Atom, Formula, Sequent};
use crate::syntax::Definition;
use crate::textio::lex::{lex, TokKind, Token};
use crate::textio::{ParseError, SourceSpan};

/// How atom names are validated: user inputs may not contain generated
/// atoms; proof files may mention them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum AtomMode {
    User,
    Proof,
}

/// Parses a theory: a sequence of statements, each a formula ending in a
/// period (the period is optional after a bare definition).
pub fn parse_theory(input: &str) -> Result<Vec<Formula>, ParseError> {
    let mut p = Parser::new(input, AtomMode::User)?;
    let mut out = Vec::new();
    while p.peek().is_some() {
        let f = p.formula()?;
        if p.peek() == Some(&TokKind::Dot) {
            p.advance();
        } else if !matches!(f, Formula::Def(_)) {
            return Err(p.error_here("expected `.` after the statement"));
        }
        out.push(f);
    }
    Ok(out)
}

/// Parses a single formula spanning the whole input.
pub fn parse_formula(input: &str) -> Result<Formula, ParseError> {
    let mut p = Parser::new(input, AtomMode::User)?;
    let f = p.formula()?;
    p.expect_eof()?;
    Ok(f)
}

/// Parses a single sequent spanning the whole input.
pub fn parse_sequent(input: &str) -> Result<Sequent, ParseError> {
    let mut p = Parser::new(input, AtomMode::User)?;
    let s = p.sequent()?;
    p.expect_eof()?;
    Ok(s)
}

/// Parses a proof tree. Rule names, parameter shapes, and premise counts
/// are validated here; whether each node matches its rule schema is the
/// checker's judgment, not the parser's.
pub fn parse_proof(input: &str) -> Result<ProofTree, ParseError> {
    let mut p = Parser::new(input, AtomMode::Proof)?;
    let t = p.proof_node()?;
    p.expect_eof()?;
    Ok(t)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    mode: AtomMode,
    eof: SourceSpan,
}

impl Parser {
    fn new(input: &str, mode: AtomMode) -> Result<Parser, ParseError> {
        let toks = lex(input)?;
        let eof = toks.last().map_or(
            SourceSpan {
                start: 0,
                end: 0,
                line: 1,
                column: 1,
            },
            |t| SourceSpan {
                start: t.span.end,
                end: t.span.end,
                line: t.span.line,
                column: t.span.column + (t.span.end - t.span.start) as u32,
            },
        );
        Ok(Parser {
            toks,
            pos: 0,
            mode,
            eof,
        })
    }

    fn peek(&self) -> Option<&TokKind> {
        self.toks.get(self.pos).map(|t| &t.kind)
    }

    fn span_here(&self) -> SourceSpan {
        self.toks.get(self.pos).map_or(self.eof, |t| t.span)
    }

    fn advance(&mut self) -> Option<Token> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn error_here(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            message: message.into(),
            span: self.span_here(),
        }
    }

    fn describe_here(&self) -> String {
        self.peek()
            .map_or("end of input".to_string(), TokKind::describe)
    }

    fn expect(&mut self, kind: TokKind) -> Result<Token, ParseError> {
        if self.peek() == Some(&kind) {
            Ok(self.advance().expect("token was peeked"))
        } else {
            Err(self.error_here(format!(
                "expected {}, found {}",
                kind.describe(),
                self.describe_here()
            )))
        }
    }

    fn expect_eof(&self) -> Result<(), ParseError> {
        if self.peek().is_some() {
            return Err(self.error_here(format!(
                "expected end of input, found {}",
                self.describe_here()
            )));
        }
        Ok(())
    }

    fn expect_ident(&mut self, what: &str) -> Result<(String, SourceSpan), ParseError> {
        match self.peek() {
            Some(TokKind::Ident(_)) => {
                let t = self.advance().expect("token was peeked");
                let TokKind::Ident(name) = t.kind else {
                    unreachable!()
                };
                Ok((name, t.span))
            }
            _ => Err(self.error_here(format!(
                "expected {what}, found {}",
                self.describe_here()
            ))),
        }
    }

    fn atom(&self, name: &str, span: SourceSpan) -> Result<Atom, ParseError> {
        let res = match self.mode {
            AtomMode::User => Atom::user(name),
            AtomMode::Proof => Atom::parse(name),
        };
        res.map_err(|e| ParseError {
            message: e.to_string(),
            span,
        })
    }

    // ---- formulas -------------------------------------------------------

    fn formula(&mut self) -> Result<Formula, ParseError> {
        self.iff()
    }

    fn iff(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.implies()?;
        while self.peek() == Some(&TokKind::Iff) {
            self.advance();
            let rhs = self.implies()?;
            f = Formula::iff(f, rhs);
        }
        Ok(f)
    }

    fn implies(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.or()?;
        if self.peek() == Some(&TokKind::Implies) {
            self.advance();
            let rhs = self.implies()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.and()?;
        while self.peek() == Some(&TokKind::Pipe) {
            self.advance();
            let rhs = self.and()?;
            f = Formula::or(f, rhs);
        }
        Ok(f)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.unary()?;
        while self.peek() == Some(&TokKind::Amp) {
            self.advance();
            let rhs = self.unary()?;
            f = Formula::and(f, rhs);
        }
        Ok(f)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        if self.peek() == Some(&TokKind::Tilde) {
            self.advance();
            return Ok(Formula::not(self.unary()?));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Some(TokKind::Ident(name)) if name == "true" => {
                self.advance();
                Ok(Formula::True)
            }
            Some(TokKind::Ident(name)) if name == "false" => {
                self.advance();
                Ok(Formula::False)
            }
            Some(TokKind::Ident(_)) => {
                let (name, span) = self.expect_ident("an atom")?;
                Ok(Formula::Atom(self.atom(&name, span)?))
            }
            Some(TokKind::LParen) => {
                self.advance();
                let f = self.formula()?;
                self.expect(TokKind::RParen)?;
                Ok(f)
            }
            Some(TokKind::LBrace) => Ok(Formula::Def(self.definition()?)),
            _ => Err(self.error_here(format!(
                "expected a formula, found {}",
                self.describe_here()
            ))),
        }
    }

    fn definition(&mut self) -> Result<Definition, ParseError> {
        let open = self.expect(TokKind::LBrace)?;
        let mut rules = Vec::new();
        while self.peek() != Some(&TokKind::RBrace) {
            let (name, span) = self.expect_ident("a rule head")?;
            let head = self.atom(&name, span)?;
            self.expect(TokKind::Arrow)?;
            let body = self.formula()?;
            self.expect(TokKind::Dot)?;
            rules.push((head, body));
        }
        self.expect(TokKind::RBrace)?;
        Definition::normalize(rules).map_err(|e| ParseError {
            message: e.to_string(),
            span: open.span,
        })
    }

    // ---- sequents -------------------------------------------------------

    fn starts_formula(&self) -> bool {
        matches!(
            self.peek(),
            Some(TokKind::Ident(_) | TokKind::LParen | TokKind::LBrace | TokKind::Tilde)
        )
    }

    fn formula_list(&mut self) -> Result<Vec<Formula>, ParseError> {
        let mut out = vec![self.formula()?];
        while self.peek() == Some(&TokKind::Comma) {
            self.advance();
            out.push(self.formula()?);
        }
        Ok(out)
    }

    fn sequent(&mut self) -> Result<Sequent, ParseError> {
        let ante = if self.peek() == Some(&TokKind::Turnstile) {
            Vec::new()
        } else {
            self.formula_list()?
        };
        self.expect(TokKind::Turnstile)?;
        let succ = if self.starts_formula() {
            self.formula_list()?
        } else {
            Vec::new()
        };
        Ok(Sequent::new(ante, succ))
    }

    // ---- proofs ---------------------------------------------------------

    fn rule_name(&mut self) -> Result<RuleName, ParseError> {
        let (first, span) = self.expect_ident("a rule name")?;
        let mut name = first;
        while self.peek() == Some(&TokKind::Minus) {
            self.advance();
            let (next, _) = self.expect_ident("the rest of the rule name")?;
            name.push('-');
            name.push_str(&next);
        }
        RuleName::parse(&name).ok_or(ParseError {
            message: format!("unknown rule name `{name}`"),
            span,
        })
    }

    fn embedded_sequent(&mut self) -> Result<Sequent, ParseError> {
        let (text, span) = self.string_value()?;
        parse_embedded(&text, span, "sequent", |p| p.sequent())
    }

    fn embedded_formula(&mut self) -> Result<Formula, ParseError> {
        let (text, span) = self.string_value()?;
        parse_embedded(&text, span, "formula", |p| p.formula())
    }

    fn string_value(&mut self) -> Result<(String, SourceSpan), ParseError> {
        match self.peek() {
            Some(TokKind::Str(_)) => {
                let t = self.advance().expect("token was peeked");
                let TokKind::Str(text) = t.kind else {
                    unreachable!()
                };
                Ok((text, t.span))
            }
            _ => Err(self.error_here(format!(
                "expected a quoted string, found {}",
                self.describe_here()
            ))),
        }
    }

    fn atom_set(&mut self) -> Result<BTreeSet<Atom>, ParseError> {
        self.expect(TokKind::LBrace)?;
        let mut out = BTreeSet::new();
        if self.peek() != Some(&TokKind::RBrace) {
            loop {
                let (name, span) = self.expect_ident("an atom")?;
                out.insert(self.atom(&name, span)?);
                if self.peek() == Some(&TokKind::Comma) {
                    self.advance();
                } else {
                    break;
                }
            }
        }
        self.expect(TokKind::RBrace)?;
        Ok(out)
    }

    fn proof_node(&mut self) -> Result<ProofTree, ParseError> {
        let open = self.expect(TokKind::LBrace)?;
        let mut rule: Option<RuleName> = None;
        let mut sequent: Option<Sequent> = None;
        let mut params = Params::default();
        let mut children: Vec<ProofTree> = Vec::new();
        let mut premises_seen = false;

        loop {
            match self.peek() {
                Some(TokKind::RBrace) => {
                    self.advance();
                    break;
                }
                Some(TokKind::Ident(field)) => {
                    let field = field.clone();
                    let field_span = self.span_here();
                    self.advance();
                    match field.as_str() {
                        "rule" => {
                            self.expect(TokKind::Colon)?;
                            set_once(&mut rule, self.rule_name()?, "rule", field_span)?;
                        }
                        "sequent" => {
                            self.expect(TokKind::Colon)?;
                            set_once(
                                &mut sequent,
                                self.embedded_sequent()?,
                                "sequent",
                                field_span,
                            )?;
                        }
                        "formula" => {
                            self.expect(TokKind::Colon)?;
                            set_once(
                                &mut params.formula,
                                self.embedded_formula()?,
                                "formula",
                                field_span,
                            )?;
                        }
                        "cutformula" => {
                            self.expect(TokKind::Colon)?;
                            set_once(
                                &mut params.cutformula,
                                self.embedded_formula()?,
                                "cutformula",
                                field_span,
                            )?;
                        }
                        "atom" => {
                            self.expect(TokKind::Colon)?;
                            let (name, span) = self.expect_ident("an atom")?;
                            set_once(
                                &mut params.atom,
                                self.atom(&name, span)?,
                                "atom",
                                field_span,
                            )?;
                        }
                        "uset" => {
                            self.expect(TokKind::Colon)?;
                            set_once(&mut params.uset, self.atom_set()?, "uset", field_span)?;
                        }
                        "vset" => {
                            self.expect(TokKind::Colon)?;
                            set_once(&mut params.vset, self.atom_set()?, "vset", field_span)?;
                        }
                        "index" => {
                            return Err(ParseError {
                                message: "malformed params: `index` is not accepted by any rule"
                                    .to_string(),
                                span: field_span,
                            });
                        }
                        "premises" => {
                            if premises_seen {
                                return Err(ParseError {
                                    message: "duplicate `premises` block".to_string(),
                                    span: field_span,
                                });
                            }
                            premises_seen = true;
                            self.expect(TokKind::LBrace)?;
                            while self.peek() == Some(&TokKind::LBrace) {
                                children.push(self.proof_node()?);
                            }
                            self.expect(TokKind::RBrace)?;
                        }
                        other => {
                            return Err(ParseError {
                                message: format!("unknown proof-node field `{other}`"),
                                span: field_span,
                            });
                        }
                    }
                }
                _ => {
                    return Err(self.error_here(format!(
                        "expected a proof-node field or `}}`, found {}",
                        self.describe_here()
                    )));
                }
            }
        }

        let rule = rule.ok_or(ParseError {
            message: "proof node is missing its `rule` field".to_string(),
            span: open.span,
        })?;
        let conclusion = sequent.ok_or(ParseError {
            message: "proof node is missing its `sequent` field".to_string(),
            span: open.span,
        })?;
        if let Some(expected) = expected_arity(rule, &params) {
            if children.len() != expected {
                return Err(ParseError {
                    message: format!(
                        "arity mismatch for {rule}: expected {expected} premises, found {}",
                        children.len()
                    ),
                    span: open.span,
                });
            }
        }
        let premises = children.iter().map(|c| c.root().clone()).collect();
        Ok(ProofTree {
            instance: RuleInstance {
                rule,
                params,
                conclusion,
                premises,
            },
            children,
        })
    }
}

/// The premise count fixed by a rule (and its parameters), when the
/// parameters determine one.
fn expected_arity(rule: RuleName, params: &Params) -> Option<usize> {
    use RuleName::*;
    match rule {
        AxiomId | AxiomBot | AxiomTop => Some(0),
        WeakenL | WeakenR | ContractL | ContractR | NotL | NotR | AndL | OrR | DefR => Some(1),
        Cut | AndR | OrL | DefNontotal => Some(2),
        DefL => params.uset.as_ref().map(BTreeSet::len),
        DefIntro => match &params.formula {
            Some(Formula::Def(d)) => Some(d.len()),
            _ => None,
        },
    }
}

fn set_once<T>(
    slot: &mut Option<T>,
    value: T,
    field: &str,
    span: SourceSpan,
) -> Result<(), ParseError> {
    if slot.is_some() {
        return Err(ParseError {
            message: format!("duplicate `{field}` field"),
            span,
        });
    }
    *slot = Some(value);
    Ok(())
}

fn parse_embedded<T>(
    text: &str,
    span: SourceSpan,
    what: &str,
    go: impl FnOnce(&mut Parser) -> Result<T, ParseError>,
) -> Result<T, ParseError> {
    let mut p = Parser::new(text, AtomMode::Proof).map_err(|e| ParseError {
        message: format!("in embedded {what}: {}", e.message),
        span,
    })?;
    let value = go(&mut p).map_err(|e| ParseError {
        message: format!("in embedded {what}: {}", e.message),
        span,
    })?;
    p.expect_eof().map_err(|e| ParseError {
        message: format!("in embedded {what}: {}", e.message),
        span,
    })?;
    Ok(value)
}
