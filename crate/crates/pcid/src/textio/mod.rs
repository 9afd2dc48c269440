//! Concrete syntax: lexing, parsing, and canonical printing of theories,
//! sequents, and proofs.
//!
//! The grammar is ASCII. Atoms match `[a-z][a-zA-Z0-9_]*`; `~`, `&`, `|`,
//! `=>`, `<=>` are the connectives in decreasing binding strength, with
//! `=>` and `<=>` desugared at parse time; `true` and `false` are the
//! constants; definitions are rule blocks in braces (`{ p <- body. ... }`);
//! sequents separate comma-lists of formulas with `|-`. Theory statements
//! end with a period (optional after a bare definition). Proof files are
//! nested node blocks carrying a rule name, the concluded sequent, rule
//! parameters, and child nodes under `premises`.

mod lex;
mod parse;
mod print;

use std::fmt;

pub use parse::{parse_formula, parse_proof, parse_sequent, parse_theory};
pub use print::{print_formula, print_proof, print_sequent, print_theory};

/// A byte range in the source text, with the 1-based line and column of its
/// start.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SourceSpan {
    pub start: usize,
    pub end: usize,
    pub line: u32,
    pub column: u32,
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

/// A parse error: a message and the span where parsing failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
    pub span: SourceSpan,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.span, self.message)
    }
}

impl std::error::Error for ParseError {}
