//! Text grammar shared by scalars and algebra elements.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := ('-' | '+') unary | power
//! power := atom ('^' ['-'] INT)?
//! atom  := INT | IDENT | '(' expr ')'
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{ParameterSpace, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Int(BigInt),
    Ident(String, usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, usize),
    Pow(Box<Expr>, i64, usize),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Generator identifiers are `x` followed by a 1-based decimal index.
pub fn is_generator_name(s: &str) -> bool {
    generator_index(s).is_some()
}

pub fn generator_index(s: &str) -> Option<usize> {
    let digits = s.strip_prefix('x')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0') {
        return None;
    }
    digits.parse().ok()
}

pub(crate) fn error_at(text: &str, offset: usize, message: impl Into<String>) -> Error {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    Error::Parse { line, column, message: message.into() }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Int(text[start..i].parse().expect("digits")), start));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(text[start..i].to_string()), start));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Sym(c), i));
            i += 1;
        } else {
            return Err(error_at(text, i, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    text: &'a str,
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.text.len(), |(_, o)| *o)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.peek() == Some(&Tok::Sym('/')) {
                let at = self.offset();
                self.pos += 1;
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?), at);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Sym('^')) {
            return Ok(base);
        }
        let at = self.offset();
        self.pos += 1;
        let paren = self.eat('(');
        let negative = self.eat('-');
        let exp = match self.toks.get(self.pos) {
            Some((Tok::Int(n), _)) => {
                let n: i64 = n.try_into().map_err(|_| error_at(self.text, self.offset(), "exponent too large"))?;
                self.pos += 1;
                if negative {
                    -n
                } else {
                    n
                }
            }
            _ => return Err(error_at(self.text, self.offset(), "expected integer exponent")),
        };
        if paren && !self.eat(')') {
            return Err(error_at(self.text, self.offset(), "expected `)`"));
        }
        Ok(Expr::Pow(Box::new(base), exp, at))
    }

    fn atom(&mut self) -> Result<Expr> {
        let at = self.offset();
        match self.toks.get(self.pos).cloned() {
            Some((Tok::Int(n), _)) => {
                self.pos += 1;
                Ok(Expr::Int(n))
            }
            Some((Tok::Ident(name), _)) => {
                self.pos += 1;
                Ok(Expr::Ident(name, at))
            }
            Some((Tok::Sym('('), _)) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(error_at(self.text, self.offset(), "expected `)`"));
                }
                Ok(e)
            }
            Some((t, _)) => Err(error_at(self.text, at, format!("unexpected token {t:?}"))),
            None => Err(error_at(self.text, at, "unexpected end of input")),
        }
    }
}

pub fn parse_expr(text: &str) -> Result<Expr> {
    let toks = tokenize(text)?;
    let mut p = Parser { text, toks, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(error_at(text, p.offset(), "trailing input"));
    }
    Ok(e)
}

pub fn parse_scalar(text: &str, params: &ParameterSpace) -> Result<Scalar> {
    let e = parse_expr(text)?;
    eval_scalar(&e, text, params)
}

pub(crate) fn eval_scalar(e: &Expr, text: &str, params: &ParameterSpace) -> Result<Scalar> {
    let ev = |x: &Expr| eval_scalar(x, text, params);
    Ok(match e {
        Expr::Int(n) => Scalar::from_rational(&BigRational::from_integer(n.clone())),
        Expr::Ident(name, at) => match params.index_of(name) {
            Some(i) => Scalar::param(i),
            None => return Err(error_at(text, *at, format!("unknown parameter `{name}`"))),
        },
        Expr::Neg(a) => ev(a)?.neg(),
        Expr::Add(a, b) => ev(a)?.add(&ev(b)?),
        Expr::Sub(a, b) => ev(a)?.sub(&ev(b)?),
        Expr::Mul(a, b) => ev(a)?.mul(&ev(b)?),
        Expr::Div(a, b, at) => ev(a)?.div(&ev(b)?).map_err(|_| error_at(text, *at, "division by zero"))?,
        Expr::Pow(a, k, at) => ev(a)?.pow(*k).map_err(|_| error_at(text, *at, "zero raised to a negative power"))?,
    })
}

/// `n` or `n/d` with optional sign.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (text.trim().parse::<BigInt>().ok()?, BigInt::from(1)),
    };
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}
