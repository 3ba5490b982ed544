//! Problem files.
//!
//! ```text
//! # twisted cubic
//! ring x1 x2 x3 x4;
//! ideal P = x1^2-x2*x3, x1*x2-x3*x4, x2^2-x1*x4;
//! ops L = 1, dx1, dx1^2-2*x2*dx2;
//! ```
//!
//! Statements end with `;`, `#` starts a comment, and the ring must be
//! declared before anything that uses it.

use noether::field::Rationals;
use noether::groebner::Ideal;
use noether::poly::{parse_polynomial_list, split_top_level, MonomialOrder, PolyRing, Ring};
use noether::weyl::DiffOp;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug)]
pub struct ProblemFile {
    ring: Ring<Rationals>,
    ideals: Vec<(String, Ideal<Rationals>)>,
    ops: Vec<(String, Vec<DiffOp>)>,
}

fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

struct Source<'a> {
    text: &'a str,
}

impl Source<'_> {
    fn error(&self, offset: usize, message: impl Into<String>) -> ParseError {
        let before = &self.text[..offset.min(self.text.len())];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

/// Offset of `inner` within `outer`; `inner` must be a subslice.
fn offset_in(outer: &str, inner: &str) -> usize {
    inner.as_ptr() as usize - outer.as_ptr() as usize
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<ProblemFile, ParseError> {
        let src = Source { text };
        // Blank out comments so that offsets stay valid.
        let cleaned: String = text
            .split_inclusive('\n')
            .map(|l| match l.find('#') {
                Some(i) => {
                    let tail: String = l[i..].chars().map(|c| if c == '\n' { '\n' } else { ' ' }).collect();
                    format!("{}{}", &l[..i], tail)
                }
                None => l.to_string(),
            })
            .collect();
        let mut ring: Option<Ring<Rationals>> = None;
        let mut ideals: Vec<(String, Ideal<Rationals>)> = Vec::new();
        let mut ops: Vec<(String, Vec<DiffOp>)> = Vec::new();
        let mut pieces: Vec<&str> = cleaned.split(';').collect();
        if let Some(last) = pieces.last() {
            if !last.trim().is_empty() {
                let at = offset_in(&cleaned, last) + (last.len() - last.trim_start().len());
                return Err(src.error(at, "missing `;` after the last statement"));
            }
            pieces.pop();
        }
        for stmt in pieces {
            let body = stmt.trim_start();
            if body.trim().is_empty() {
                continue;
            }
            let start = offset_in(&cleaned, body);
            let (keyword, rest) = body.split_at(body.find(char::is_whitespace).unwrap_or(body.len()));
            match keyword {
                "ring" => {
                    if ring.is_some() {
                        return Err(src.error(start, "the ring is declared twice"));
                    }
                    let mut names = Vec::new();
                    for name in rest.split(|c: char| c.is_whitespace() || c == ',').filter(|s| !s.is_empty()) {
                        if !is_name(name) {
                            return Err(src.error(offset_in(&cleaned, name), format!("`{name}` is not a variable name")));
                        }
                        if names.iter().any(|n| n == name) {
                            return Err(src.error(offset_in(&cleaned, name), format!("variable `{name}` declared twice")));
                        }
                        names.push(name.to_string());
                    }
                    if names.is_empty() {
                        return Err(src.error(start, "the ring needs at least one variable"));
                    }
                    ring = Some(PolyRing::new(Rationals, names, MonomialOrder::GrevLex));
                }
                "ideal" | "ops" => {
                    let Some(r) = &ring else {
                        return Err(src.error(start, "declare the ring first"));
                    };
                    let Some(eq) = rest.find('=') else {
                        return Err(src.error(start, format!("expected `{keyword} NAME = ...`")));
                    };
                    let name = rest[..eq].trim();
                    if !is_name(name) {
                        return Err(src.error(start, format!("`{name}` is not a valid name")));
                    }
                    if ideals.iter().any(|(n, _)| n == name) || ops.iter().any(|(n, _)| n == name) {
                        return Err(src.error(start, format!("`{name}` is defined twice")));
                    }
                    let list = &rest[eq + 1..];
                    let list_at = offset_in(&cleaned, list);
                    if keyword == "ideal" {
                        let gens = parse_polynomial_list(list, r).map_err(|e| algebra_error(&src, list_at, e))?;
                        let ideal = Ideal::new(r, gens).expect("parsed in the same ring");
                        ideals.push((name.to_string(), ideal));
                    } else {
                        let mut list_ops = Vec::new();
                        for (off, piece) in split_top_level(list) {
                            if piece.trim().is_empty() {
                                return Err(src.error(list_at + off, "empty operator"));
                            }
                            list_ops.push(DiffOp::parse(piece, r).map_err(|e| algebra_error(&src, list_at + off, e))?);
                        }
                        ops.push((name.to_string(), list_ops));
                    }
                }
                other => {
                    return Err(src.error(start, format!("unknown statement `{other}`")));
                }
            }
        }
        let Some(ring) = ring else {
            return Err(src.error(0, "no ring declaration"));
        };
        Ok(ProblemFile { ring, ideals, ops })
    }

    pub fn ring(&self) -> &Ring<Rationals> {
        &self.ring
    }

    pub fn ideal(&self, name: &str) -> Option<&Ideal<Rationals>> {
        self.ideals.iter().find(|(n, _)| n == name).map(|(_, i)| i)
    }

    pub fn ops(&self, name: &str) -> Option<&[DiffOp]> {
        self.ops.iter().find(|(n, _)| n == name).map(|(_, o)| o.as_slice())
    }
}

fn algebra_error(src: &Source, base: usize, e: noether::Error) -> ParseError {
    match e {
        noether::Error::Parse { offset, message } => src.error(base + offset, message),
        other => src.error(base, other.to_string()),
    }
}
