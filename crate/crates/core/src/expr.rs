//! Element expressions.
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' nat)?
//! atom   := 'x' | 'y' | 'h' | scalar | '(' expr ')'
//! scalar := ['-'] digits ['/' digits]
//! ```
//!
//! Whitespace is allowed between tokens. Products are noncommutative; scalar
//! factors commute and are pulled to the front of their term. Evaluation
//! normalizes through the rewriting system.

use std::fmt;

use thiserror::Error;

use crate::algebra::{reduce_combination, Algebra, Element, FreeCombination, FreeWord, Letter, Strategy};
use crate::error::{capacity, Result};
use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Lex,
    Syntax,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Lex => write!(f, "lex error"),
            ParseErrorKind::Syntax => write!(f, "syntax error"),
        }
    }
}

/// A positioned parse failure; `position` is a 0-based byte offset.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at offset {position}: {message}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub position: usize,
    pub message: String,
}

impl ParseError {
    fn syntax(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            kind: ParseErrorKind::Syntax,
            position,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    X,
    Y,
    H,
    Num(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::X => write!(f, "'x'"),
            Tok::Y => write!(f, "'y'"),
            Tok::H => write!(f, "'h'"),
            Tok::Num(n) => write!(f, "number {n}"),
            Tok::Plus => write!(f, "'+'"),
            Tok::Minus => write!(f, "'-'"),
            Tok::Star => write!(f, "'*'"),
            Tok::Caret => write!(f, "'^'"),
            Tok::Slash => write!(f, "'/'"),
            Tok::LParen => write!(f, "'('"),
            Tok::RParen => write!(f, "')'"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Num(text[start..i].to_string()), start));
                continue;
            }
            b'x' => Tok::X,
            b'y' => Tok::Y,
            b'h' => Tok::H,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'/' => Tok::Slash,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(ParseError {
                    kind: ParseErrorKind::Lex,
                    position: i,
                    message: format!("unexpected character {ch:?}"),
                });
            }
        };
        out.push((tok, i));
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// `scalar := ['-'] digits ['/' digits]`, kept as text so it stays exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarLit {
    pub negative: bool,
    pub numer: String,
    pub denom: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Atom {
    X,
    Y,
    H,
    Scalar(ScalarLit),
    Group(Box<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub atom: Atom,
    pub exponent: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub factors: Vec<Factor>,
}

/// Parsed expression; the first entry always carries `Sign::Plus`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr {
    pub terms: Vec<(Sign, Term)>,
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expect_num(&mut self, what: &str) -> Result<String, ParseError> {
        match self.peek().clone() {
            Tok::Num(n) => {
                self.bump();
                Ok(n)
            }
            t => Err(ParseError::syntax(self.offset(), format!("expected {what}, found {t}"))),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut terms = vec![(Sign::Plus, self.term()?)];
        loop {
            let sign = match self.peek() {
                Tok::Plus => Sign::Plus,
                Tok::Minus => Sign::Minus,
                _ => break,
            };
            self.bump();
            terms.push((sign, self.term()?));
        }
        Ok(Expr { terms })
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let mut factors = vec![self.factor()?];
        while *self.peek() == Tok::Star {
            self.bump();
            factors.push(self.factor()?);
        }
        Ok(Term { factors })
    }

    fn factor(&mut self) -> Result<Factor, ParseError> {
        let atom = self.atom()?;
        let exponent = if *self.peek() == Tok::Caret {
            self.bump();
            let at = self.offset();
            let n = self.expect_num("exponent")?;
            Some(
                n.parse::<u32>()
                    .map_err(|_| ParseError::syntax(at, "exponent too large"))?,
            )
        } else {
            None
        };
        Ok(Factor { atom, exponent })
    }

    fn atom(&mut self) -> Result<Atom, ParseError> {
        let at = self.offset();
        match self.bump() {
            Tok::X => Ok(Atom::X),
            Tok::Y => Ok(Atom::Y),
            Tok::H => Ok(Atom::H),
            Tok::Minus => {
                let numer = self.expect_num("digits after '-'")?;
                self.scalar_tail(true, numer)
            }
            Tok::Num(numer) => self.scalar_tail(false, numer),
            Tok::LParen => {
                let inner = self.expr()?;
                match self.peek() {
                    Tok::RParen => {
                        self.bump();
                        Ok(Atom::Group(Box::new(inner)))
                    }
                    t => Err(ParseError::syntax(self.offset(), format!("expected ')', found {t}"))),
                }
            }
            t => {
                self.pos -= usize::from(t != Tok::End);
                Err(ParseError::syntax(at, format!("expected atom, found {t}")))
            }
        }
    }

    fn scalar_tail(&mut self, negative: bool, numer: String) -> Result<Atom, ParseError> {
        let denom = if *self.peek() == Tok::Slash {
            self.bump();
            Some(self.expect_num("denominator")?)
        } else {
            None
        };
        Ok(Atom::Scalar(ScalarLit { negative, numer, denom }))
    }
}

/// Parses `text` into an expression tree.
pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let e = p.expr()?;
    match p.peek() {
        Tok::End => Ok(e),
        t => Err(ParseError::syntax(p.offset(), format!("unexpected {t}"))),
    }
}

impl fmt::Display for ScalarLit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            write!(f, "-")?;
        }
        write!(f, "{}", self.numer)?;
        if let Some(d) = &self.denom {
            write!(f, "/{d}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::X => write!(f, "x"),
            Atom::Y => write!(f, "y"),
            Atom::H => write!(f, "h"),
            Atom::Scalar(s) => write!(f, "{s}"),
            Atom::Group(e) => write!(f, "({e})"),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.atom)?;
        if let Some(e) = self.exponent {
            write!(f, "^{e}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (sign, term)) in self.terms.iter().enumerate() {
            match (i, sign) {
                (0, _) => {}
                (_, Sign::Plus) => write!(f, " + ")?,
                (_, Sign::Minus) => write!(f, " - ")?,
            }
            write!(f, "{term}")?;
        }
        Ok(())
    }
}

struct Expander<'a> {
    field: &'a FieldSpec,
    max_words: u64,
}

impl Expander<'_> {
    fn expr<K: Scalar>(&self, e: &Expr) -> Result<FreeCombination<K>> {
        let mut out = FreeCombination::new();
        for (sign, term) in &e.terms {
            let t = self.term::<K>(term)?;
            match sign {
                Sign::Plus => out.add(&t),
                Sign::Minus => out.add(&t.scale(&-K::one())),
            }
        }
        Ok(out)
    }

    fn term<K: Scalar>(&self, t: &Term) -> Result<FreeCombination<K>> {
        let mut scalar = K::one().bind(self.field)?;
        let mut acc = FreeCombination::word(FreeWord::new(K::one(), Vec::new()));
        for factor in &t.factors {
            let exp = factor.exponent.unwrap_or(1);
            if let Atom::Scalar(lit) = &factor.atom {
                scalar = scalar * K::parse(&lit.to_string(), self.field)?.pow(exp as u64);
                continue;
            }
            let base = self.atom::<K>(&factor.atom)?;
            for _ in 0..exp {
                acc = acc.concat(&base);
                if acc.len() as u64 > self.max_words {
                    return Err(capacity(
                        "words in expanded expression",
                        acc.len() as u64,
                        self.max_words,
                    ));
                }
            }
        }
        Ok(acc.scale(&scalar))
    }

    fn atom<K: Scalar>(&self, a: &Atom) -> Result<FreeCombination<K>> {
        let letter = |l| FreeCombination::word(FreeWord::new(K::one(), vec![l]));
        match a {
            Atom::X => Ok(letter(Letter::X)),
            Atom::Y => Ok(letter(Letter::Y)),
            Atom::H => Ok(letter(Letter::H)),
            Atom::Scalar(lit) => {
                let c = K::parse(&lit.to_string(), self.field)?;
                Ok(FreeCombination::word(FreeWord::new(c, Vec::new())))
            }
            Atom::Group(e) => self.expr(e),
        }
    }
}

impl Expr {
    /// Expands into a linear combination of free words over `field`.
    pub fn to_combination<K: Scalar>(&self, field: &FieldSpec, max_words: u64) -> Result<FreeCombination<K>> {
        Expander { field, max_words }.expr(self)
    }
}

/// Parses and normalizes an element expression in `alg`.
pub fn parse_element<K: Scalar>(text: &str, alg: &Algebra<K>) -> Result<Element<K>> {
    let e = parse_expr(text)?;
    let comb = e.to_combination::<K>(alg.field(), alg.limits().max_basis)?;
    reduce_combination(&comb, alg, Strategy::Leftmost)
}
