//! Recursive-descent parser for polynomial expressions such as
//! `x1^2-x2*x3`, `3/2*x1 x2`, `(x1+1)^3`. Multiplication may be implicit.

use super::polynomial::{constant, var, Polynomial, Ring};
use crate::error::{Error, Result};
use crate::field::{Field, Rational};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(BigInt),
    Var { name: String, offset: usize },
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, usize),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

fn tokenize(s: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = s.as_bytes();
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
            let n: BigInt = s[start..i].parse().map_err(|_| err(start, "bad number"))?;
            out.push((Tok::Num(n), start));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(s[start..i].to_string()), start));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Sym(c), i));
            i += 1;
        } else {
            return Err(err(i, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.1)
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
        let mut lhs = if self.eat('-') {
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.eat('+');
            self.term()?
        };
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
        let mut lhs = self.factor()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
            } else if self.peek() == Some(&Tok::Sym('/')) {
                let at = self.offset();
                self.pos += 1;
                lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?), at);
            } else if matches!(self.peek(), Some(Tok::Num(_) | Tok::Ident(_) | Tok::Sym('('))) {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let base = self.primary()?;
        if self.eat('^') {
            let at = self.offset();
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let k = n.to_u32().ok_or_else(|| err(at, "exponent too large"))?;
                    Ok(Expr::Pow(Box::new(base), k))
                }
                _ => Err(err(at, "expected a non-negative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn primary(&mut self) -> Result<Expr> {
        let at = self.offset();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Expr::Num(n))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Ok(Expr::Var { name, offset: at })
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(err(self.offset(), "expected `)`"));
                }
                Ok(e)
            }
            Some(Tok::Sym(c)) => Err(err(at, format!("unexpected `{c}`"))),
            None => Err(err(at, "unexpected end of input")),
        }
    }
}

/// Parses a complete expression.
pub fn parse_expr(s: &str) -> Result<Expr> {
    let toks = tokenize(s)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: s.len(),
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(err(p.offset(), "trailing input"));
    }
    Ok(e)
}

/// Target algebra for evaluating an [`Expr`].
pub trait EvalTarget {
    type Value: Clone;
    fn number(&self, q: &Rational) -> Self::Value;
    fn variable(&self, name: &str, offset: usize) -> Result<Self::Value>;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn neg(&self, a: &Self::Value) -> Self::Value;
    /// `Some(q)` if the value is the constant `q`.
    fn as_constant(&self, a: &Self::Value) -> Option<Rational>;
}

impl Expr {
    pub fn eval<T: EvalTarget>(&self, t: &T) -> Result<T::Value> {
        Ok(match self {
            Expr::Num(n) => t.number(&Rational::from_integer(n.clone())),
            Expr::Var { name, offset } => t.variable(name, *offset)?,
            Expr::Add(a, b) => t.add(&a.eval(t)?, &b.eval(t)?),
            Expr::Sub(a, b) => t.add(&a.eval(t)?, &t.neg(&b.eval(t)?)),
            Expr::Mul(a, b) => t.mul(&a.eval(t)?, &b.eval(t)?),
            Expr::Neg(a) => t.neg(&a.eval(t)?),
            Expr::Div(a, b, at) => {
                let d = b.eval(t)?;
                let q = t
                    .as_constant(&d)
                    .ok_or_else(|| err(*at, "division only by nonzero constants"))?;
                if q.is_zero() {
                    return Err(err(*at, "division by zero"));
                }
                t.mul(&a.eval(t)?, &t.number(&q.recip()))
            }
            Expr::Pow(a, k) => {
                let base = a.eval(t)?;
                let mut acc = t.number(&Rational::from_integer(1.into()));
                for _ in 0..*k {
                    acc = t.mul(&acc, &base);
                }
                acc
            }
        })
    }
}

struct PolyTarget<'a, F: Field>(&'a Ring<F>);

impl<F: Field> EvalTarget for PolyTarget<'_, F> {
    type Value = Polynomial<F>;

    fn number(&self, q: &Rational) -> Polynomial<F> {
        constant(self.0, self.0.field().from_rational(q))
    }

    fn variable(&self, name: &str, offset: usize) -> Result<Polynomial<F>> {
        self.0
            .var_index(name)
            .map(|i| var(self.0, i))
            .ok_or_else(|| err(offset, format!("unknown variable `{name}`")))
    }

    fn add(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        a + b
    }

    fn mul(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        a * b
    }

    fn neg(&self, a: &Polynomial<F>) -> Polynomial<F> {
        a.neg()
    }

    fn as_constant(&self, a: &Polynomial<F>) -> Option<Rational> {
        if a.is_zero() {
            return Some(Rational::zero());
        }
        if a.is_constant() {
            self.0.field().as_rational(a.lc())
        } else {
            None
        }
    }
}

/// Parses `s` as a polynomial in `ring`.
pub fn parse_polynomial<F: Field>(s: &str, ring: &Ring<F>) -> Result<Polynomial<F>> {
    parse_expr(s)?.eval(&PolyTarget(ring))
}

/// Splits on top-level commas, returning each piece with its byte offset.
pub fn split_top_level(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push((start, &s[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((start, &s[start..]));
    out
}

/// Parses a comma-separated list of polynomials.
pub fn parse_polynomial_list<F: Field>(s: &str, ring: &Ring<F>) -> Result<Vec<Polynomial<F>>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    split_top_level(s)
        .into_iter()
        .map(|(off, piece)| {
            parse_polynomial(piece, ring).map_err(|e| match e {
                Error::Parse { offset, message } => Error::Parse {
                    offset: offset + off,
                    message,
                },
                e => e,
            })
        })
        .collect()
}
