//! The lexer shared by all concrete-syntax parsers.

use crate::textio::{ParseError, SourceSpan};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum TokKind {
    /// An identifier: a letter followed by letters, digits, underscores.
    Ident(String),
    /// A decimal number (used only by proof parameters).
    Num(String),
    /// A double-quoted string; no escape sequences.
    Str(String),
    LBrace,
    RBrace,
    LParen,
    RParen,
    Comma,
    Dot,
    Colon,
    Minus,
    Tilde,
    Amp,
    Pipe,
    Turnstile,
    Arrow,
    Implies,
    Iff,
}

impl TokKind {
    pub(crate) fn describe(&self) -> String {
        match self {
            TokKind::Ident(s) => format!("`{s}`"),
            TokKind::Num(s) => format!("`{s}`"),
            TokKind::Str(_) => "a quoted string".to_string(),
            TokKind::LBrace => "`{`".to_string(),
            TokKind::RBrace => "`}`".to_string(),
            TokKind::LParen => "`(`".to_string(),
            TokKind::RParen => "`)`".to_string(),
            TokKind::Comma => "`,`".to_string(),
            TokKind::Dot => "`.`".to_string(),
            TokKind::Colon => "`:`".to_string(),
            TokKind::Minus => "`-`".to_string(),
            TokKind::Tilde => "`~`".to_string(),
            TokKind::Amp => "`&`".to_string(),
            TokKind::Pipe => "`|`".to_string(),
            TokKind::Turnstile => "`|-`".to_string(),
            TokKind::Arrow => "`<-`".to_string(),
            TokKind::Implies => "`=>`".to_string(),
            TokKind::Iff => "`<=>`".to_string(),
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Token {
    pub kind: TokKind,
    pub span: SourceSpan,
}

struct Cursor<'a> {
    input: &'a [u8],
    pos: usize,
    line: u32,
    column: u32,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<u8> {
        self.input.get(self.pos).copied()
    }

    fn peek2(&self) -> Option<u8> {
        self.input.get(self.pos + 1).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        if b == b'\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(b)
    }

    fn here(&self) -> SourceSpan {
        SourceSpan {
            start: self.pos,
            end: self.pos,
            line: self.line,
            column: self.column,
        }
    }
}

/// Lexes the whole input. The final token list carries spans with byte
/// offsets and 1-based line/column positions.
pub(crate) fn lex(input: &str) -> Result<Vec<Token>, ParseError> {
    let mut cur = Cursor {
        input: input.as_bytes(),
        pos: 0,
        line: 1,
        column: 1,
    };
    let mut out = Vec::new();
    loop {
        while matches!(cur.peek(), Some(b' ' | b'\t' | b'\r' | b'\n')) {
            cur.bump();
        }
        let start = cur.here();
        let Some(b) = cur.peek() else { break };
        let kind = match b {
            b'{' => {
                cur.bump();
                TokKind::LBrace
            }
            b'}' => {
                cur.bump();
                TokKind::RBrace
            }
            b'(' => {
                cur.bump();
                TokKind::LParen
            }
            b')' => {
                cur.bump();
                TokKind::RParen
            }
            b',' => {
                cur.bump();
                TokKind::Comma
            }
            b'.' => {
                cur.bump();
                TokKind::Dot
            }
            b':' => {
                cur.bump();
                TokKind::Colon
            }
            b'-' => {
                cur.bump();
                TokKind::Minus
            }
            b'~' => {
                cur.bump();
                TokKind::Tilde
            }
            b'&' => {
                cur.bump();
                TokKind::Amp
            }
            b'|' => {
                cur.bump();
                if cur.peek() == Some(b'-') {
                    cur.bump();
                    TokKind::Turnstile
                } else {
                    TokKind::Pipe
                }
            }
            b'<' => {
                cur.bump();
                if cur.peek() == Some(b'-') {
                    cur.bump();
                    TokKind::Arrow
                } else if cur.peek() == Some(b'=') && cur.peek2() == Some(b'>') {
                    cur.bump();
                    cur.bump();
                    TokKind::Iff
                } else {
                    return Err(err(start, "expected `<-` or `<=>`"));
                }
            }
            b'=' => {
                cur.bump();
                if cur.peek() == Some(b'>') {
                    cur.bump();
                    TokKind::Implies
                } else {
                    return Err(err(start, "expected `=>`"));
                }
            }
            b'"' => {
                cur.bump();
                let content_start = cur.pos;
                while cur.peek().is_some_and(|c| c != b'"') {
                    cur.bump();
                }
                if cur.peek().is_none() {
                    return Err(err(start, "unterminated string"));
                }
                let text = input[content_start..cur.pos].to_string();
                cur.bump();
                TokKind::Str(text)
            }
            c if c.is_ascii_alphabetic() => {
                let ident_start = cur.pos;
                while cur
                    .peek()
                    .is_some_and(|c| c.is_ascii_alphanumeric() || c == b'_')
                {
                    cur.bump();
                }
                TokKind::Ident(input[ident_start..cur.pos].to_string())
            }
            c if c.is_ascii_digit() => {
                let num_start = cur.pos;
                while cur.peek().is_some_and(|c| c.is_ascii_digit()) {
                    cur.bump();
                }
                TokKind::Num(input[num_start..cur.pos].to_string())
            }
            c => {
                return Err(err(
                    start,
                    format!("unexpected character `{}`", char::from(c)),
                ));
            }
        };
        let span = SourceSpan {
            start: start.start,
            end: cur.pos,
            line: start.line,
            column: start.column,
        };
        out.push(Token { kind, span });
    }
    Ok(out)
}

fn err(span: SourceSpan, message: impl Into<String>) -> ParseError {
    ParseError {
        message: message.into(),
        span,
    }
}
