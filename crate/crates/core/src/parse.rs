//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar: integers, rationals written `a/b`, `+ - * ^`, parentheses.
//! Implicit multiplication is rejected; `2x` must be written `2*x`.

use num_bigint::BigInt;

use crate::error::Error;
use crate::poly::{Coeff, Polynomial};
use crate::ring::Ring;

/// Position-annotated parse failure. Line and column are 1-based and refer
/// to the string handed to the parser.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, col: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            col,
            message: message.into(),
        }
    }

    /// Shifts positions by the location of an embedded fragment, so errors
    /// in substrings report coordinates of the surrounding document.
    pub fn offset(mut self, base_line: usize, base_col: usize) -> Self {
        if self.line == 1 {
            self.col += base_col - 1;
        }
        self.line += base_line - 1;
        self
    }
}

impl From<ParseError> for Error {
    fn from(e: ParseError) -> Self {
        Error::Parse {
            line: e.line,
            col: e.col,
            message: e.message,
        }
    }
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
pub(crate) struct Spanned {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

pub(crate) fn lex(src: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tline, tcol) = (line, col);
        match c {
            '\n' => {
                chars.next();
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => {
                chars.next();
                col += 1;
            }
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => {
                chars.next();
                col += 1;
                let tok = match c {
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '/' => Tok::Slash,
                    '^' => Tok::Caret,
                    '(' => Tok::LParen,
                    _ => Tok::RParen,
                };
                out.push(Spanned {
                    tok,
                    line: tline,
                    col: tcol,
                });
            }
            c if c.is_ascii_digit() => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        s.push(d);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                let n: BigInt = s.parse().expect("digits");
                out.push(Spanned {
                    tok: Tok::Int(n),
                    line: tline,
                    col: tcol,
                });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        s.push(d);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                out.push(Spanned {
                    tok: Tok::Ident(s),
                    line: tline,
                    col: tcol,
                });
            }
            other => {
                return Err(ParseError::new(
                    tline,
                    tcol,
                    format!("unexpected character `{other}`"),
                ));
            }
        }
    }
    Ok(out)
}

struct Parser<'r> {
    ring: &'r Ring,
    toks: Vec<Spanned>,
    pos: usize,
}

impl<'r> Parser<'r> {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Spanned> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn end_pos(&self) -> (usize, usize) {
        match self.toks.last() {
            Some(t) => (t.line, t.col + 1),
            None => (1, 1),
        }
    }

    fn err_here(&self, msg: impl Into<String>) -> ParseError {
        match self.peek() {
            Some(t) => ParseError::new(t.line, t.col, msg),
            None => {
                let (l, c) = self.end_pos();
                ParseError::new(l, c, msg)
            }
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = match self.peek().map(|t| t.tok.clone()) {
            Some(Tok::Minus) => {
                self.next();
                self.ring.neg(&self.term()?)
            }
            Some(Tok::Plus) => {
                self.next();
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(t) = self.peek() {
            match t.tok {
                Tok::Plus => {
                    self.next();
                    let rhs = self.term()?;
                    acc = self.ring.add(&acc, &rhs);
                }
                Tok::Minus => {
                    self.next();
                    let rhs = self.term()?;
                    acc = self.ring.sub(&acc, &rhs);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek().map(|t| (t.tok.clone(), t.line, t.col)) {
                Some((Tok::Star, ..)) => {
                    self.next();
                    let rhs = self.factor()?;
                    acc = self.ring.mul(&acc, &rhs);
                }
                Some((Tok::Slash, line, col)) => {
                    self.next();
                    let rhs = self.factor()?;
                    if !rhs.is_constant() || rhs.is_zero() {
                        return Err(ParseError::new(
                            line,
                            col,
                            "division is only allowed by a nonzero constant",
                        ));
                    }
                    let c = rhs.terms()[0].coeff.clone();
                    acc = self.ring.scale(&acc, &(Coeff::new(BigInt::from(1), BigInt::from(1)) / c));
                }
                // adjacency such as `2x` or `x y` is an error, not a product
                Some((Tok::Int(_), ..)) | Some((Tok::Ident(_), ..)) | Some((Tok::LParen, ..)) => {
                    return Err(self.err_here("expected an operator (implicit multiplication is not allowed)"));
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        if let Some(Tok::Minus) = self.peek().map(|t| t.tok.clone()) {
            self.next();
            let inner = self.factor()?;
            return Ok(self.ring.neg(&inner));
        }
        let base = self.base()?;
        if let Some(Tok::Caret) = self.peek().map(|t| t.tok.clone()) {
            self.next();
            match self.next() {
                Some(Spanned {
                    tok: Tok::Int(n), ..
                }) => {
                    let e: u32 = n.try_into().map_err(|_| {
                        self.err_here("exponent does not fit in a machine integer")
                    })?;
                    return Ok(self.ring.pow(&base, e));
                }
                Some(t) => {
                    return Err(ParseError::new(
                        t.line,
                        t.col,
                        "exponent must be a nonnegative integer literal",
                    ))
                }
                None => return Err(self.err_here("missing exponent")),
            }
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Polynomial, ParseError> {
        match self.next() {
            Some(Spanned {
                tok: Tok::Int(n), ..
            }) => Ok(self.ring.constant(Coeff::from_integer(n))),
            Some(Spanned {
                tok: Tok::Ident(name),
                line,
                col,
            }) => match self.ring.var_index(&name) {
                Ok(i) => Ok(self.ring.var_poly(i)),
                Err(_) => Err(ParseError::new(
                    line,
                    col,
                    format!("unknown variable `{name}`"),
                )),
            },
            Some(Spanned {
                tok: Tok::LParen, ..
            }) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Spanned {
                        tok: Tok::RParen, ..
                    }) => Ok(inner),
                    Some(t) => Err(ParseError::new(t.line, t.col, "expected `)`")),
                    None => {
                        let (l, c) = self.end_pos();
                        Err(ParseError::new(l, c, "unclosed parenthesis"))
                    }
                }
            }
            Some(t) => Err(ParseError::new(t.line, t.col, "expected a polynomial term")),
            None => {
                let (l, c) = self.end_pos();
                Err(ParseError::new(l, c, "empty expression"))
            }
        }
    }
}

/// Parses a single polynomial expression over `ring`.
pub fn parse_polynomial(ring: &Ring, src: &str) -> Result<Polynomial, ParseError> {
    let toks = lex(src)?;
    if toks.is_empty() {
        return Err(ParseError::new(1, 1, "empty expression"));
    }
    let mut parser = Parser {
        ring,
        toks,
        pos: 0,
    };
    let poly = parser.expr()?;
    if let Some(t) = parser.peek() {
        return Err(ParseError::new(t.line, t.col, "trailing input"));
    }
    Ok(poly)
}
