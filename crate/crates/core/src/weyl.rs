//! Differential operators with polynomial coefficients, written in standard
//! form `Σ a_β(x) ∂^β` (coefficients to the left of the derivatives).

use crate::error::{Error, Result};
use crate::field::{Field, Rational, Rationals, ResidueElement, ResidueField, RowEchelon};
use crate::poly::{
    parse_expr, write_rational_term, EvalTarget, Monomial, MonomialOrder, PolyRing, Polynomial, Ring,
};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt::{self, Write as _};

type QPoly = Polynomial<Rationals>;

fn dorder(a: &Monomial, b: &Monomial) -> Ordering {
    MonomialOrder::GrevLex.cmp(a, b)
}

/// An element of the Weyl algebra over `Q[x_1..x_n]`. Derivative exponent
/// vectors have full length `n`.
#[derive(Clone)]
pub struct DiffOp {
    ring: Ring<Rationals>,
    /// Sorted by decreasing derivative monomial (grevlex); no zero coefficients.
    terms: Vec<(Monomial, QPoly)>,
}

impl PartialEq for DiffOp {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl DiffOp {
    pub fn from_terms(ring: &Ring<Rationals>, terms: Vec<(Monomial, QPoly)>) -> Self {
        let mut acc: Vec<(Monomial, QPoly)> = Vec::new();
        for (b, a) in terms {
            match acc.iter_mut().find(|(c, _)| *c == b) {
                Some((_, x)) => *x = &*x + &a,
                None => acc.push((b, a)),
            }
        }
        acc.retain(|(_, a)| !a.is_zero());
        acc.sort_by(|x, y| dorder(&y.0, &x.0));
        DiffOp {
            ring: ring.clone(),
            terms: acc,
        }
    }

    pub fn zero(ring: &Ring<Rationals>) -> Self {
        DiffOp {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn from_poly(p: &QPoly) -> Self {
        Self::from_terms(p.ring(), vec![(Monomial::one(p.ring().nvars()), p.clone())])
    }

    pub fn one(ring: &Ring<Rationals>) -> Self {
        Self::from_poly(&crate::poly::one(ring))
    }

    /// `∂x_i`.
    pub fn dx(ring: &Ring<Rationals>, i: usize) -> Self {
        Self::from_terms(ring, vec![(Monomial::var(ring.nvars(), i), crate::poly::one(ring))])
    }

    pub fn ring(&self) -> &Ring<Rationals> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, QPoly)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest total order of a derivative.
    pub fn order(&self) -> u32 {
        self.terms.iter().map(|(b, _)| b.degree()).max().unwrap_or(0)
    }

    /// Variables that are differentiated.
    pub fn differentiated_vars(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.terms.iter().flat_map(|(b, _)| b.support().collect::<Vec<_>>()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn add(&self, other: &DiffOp) -> DiffOp {
        let mut t = self.terms.clone();
        t.extend(other.terms.iter().cloned());
        Self::from_terms(&self.ring, t)
    }

    pub fn neg(&self) -> DiffOp {
        DiffOp {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(b, a)| (b.clone(), a.neg())).collect(),
        }
    }

    pub fn scale(&self, q: &Rational) -> DiffOp {
        Self::from_terms(
            &self.ring,
            self.terms.iter().map(|(b, a)| (b.clone(), a.scale(q))).collect(),
        )
    }

    /// `p · A`.
    pub fn left_mul(&self, p: &QPoly) -> DiffOp {
        Self::from_terms(
            &self.ring,
            self.terms.iter().map(|(b, a)| (b.clone(), p * a)).collect(),
        )
    }

    /// The action `A • f = Σ a_β ∂^β f`.
    pub fn apply(&self, f: &QPoly) -> QPoly {
        let mut out = crate::poly::zero(f.ring());
        for (b, a) in &self.terms {
            let d = f.derivative(b.exps());
            if !d.is_zero() {
                out = &out + &(a * &d);
            }
        }
        out
    }

    /// `A · x_j`, using `∂^β x_j = x_j ∂^β + β_j ∂^{β - e_j}`.
    pub fn right_mul_var(&self, j: usize) -> DiffOp {
        let xj = crate::poly::var(&self.ring, j);
        let mut t = Vec::with_capacity(2 * self.terms.len());
        for (b, a) in &self.terms {
            t.push((b.clone(), a * &xj));
            let e = b.exp(j);
            if e > 0 {
                let mut b2 = b.clone();
                b2.set_exp(j, e - 1);
                t.push((b2, a.scale(&Rational::from_integer(e.into()))));
            }
        }
        Self::from_terms(&self.ring, t)
    }

    /// `A · ∂^γ`: derivatives commute, so exponents simply add.
    pub fn right_mul_dx(&self, gamma: &Monomial) -> DiffOp {
        Self::from_terms(
            &self.ring,
            self.terms.iter().map(|(b, a)| (b.mul(gamma), a.clone())).collect(),
        )
    }

    /// Product in the Weyl algebra, by repeated single-variable commutation.
    pub fn mul(&self, other: &DiffOp) -> DiffOp {
        let mut acc = DiffOp::zero(&self.ring);
        for (g, b) in &other.terms {
            for (m, c) in b.terms() {
                let mut part = self.clone();
                for j in m.support().collect::<Vec<_>>() {
                    for _ in 0..m.exp(j) {
                        part = part.right_mul_var(j);
                    }
                }
                acc = acc.add(&part.right_mul_dx(g).scale(c));
            }
        }
        acc
    }

    /// Noetherian multiplier: replaces `∂x_i` by `z_i`, giving a polynomial in
    /// the ring returned by [`multiplier_ring`].
    pub fn to_multiplier(&self, mring: &Ring<Rationals>) -> QPoly {
        let n = self.ring.nvars();
        let mut t = Vec::new();
        for (b, a) in &self.terms {
            for (m, c) in a.terms() {
                let mut e = Monomial::one(2 * n);
                for i in 0..n {
                    e.set_exp(i, m.exp(i));
                    e.set_exp(n + i, b.exp(i));
                }
                t.push((e, c.clone()));
            }
        }
        Polynomial::from_terms(mring, t)
    }

    /// Inverse of [`DiffOp::to_multiplier`]: `z_i ↦ ∂x_i`, coefficients on the left.
    pub fn from_multiplier(ring: &Ring<Rationals>, b: &QPoly) -> DiffOp {
        let n = ring.nvars();
        let mut t = Vec::new();
        for (m, c) in b.terms() {
            let x = Monomial::new(m.exps()[..n].iter().copied());
            let d = Monomial::new(m.exps()[n..].iter().copied());
            t.push((d, crate::poly::monomial(ring, x, c.clone())));
        }
        DiffOp::from_terms(ring, t)
    }

    /// Divides by the positive rational content, making all coefficients
    /// coprime integers.
    pub fn primitive(&self) -> DiffOp {
        let c = content(self.terms.iter().flat_map(|(_, a)| a.terms().iter().map(|(_, q)| q)));
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        self.scale(&c.recip())
    }

    /// Image in the Weyl–Noether module `F ⊗ D`: coefficients `a(x)` are sent
    /// to `a(u)` in `F`. `x_to_u[i]` is the position of `u_i` in the field's
    /// `u` ring.
    pub fn reduce_to_weyl_noether(&self, field: &ResidueField, x_to_u: &[Option<usize>]) -> WeylNoether {
        let terms = self
            .terms
            .iter()
            .map(|(b, a)| {
                let u = a.rename(field.u_ring(), x_to_u).expect("total variable map");
                (b.clone(), field.from_u_poly(&u))
            })
            .collect();
        WeylNoether::from_terms(field, terms)
    }

    pub fn parse(s: &str, ring: &Ring<Rationals>) -> Result<DiffOp> {
        parse_expr(s)?.eval(&OpTarget(ring))
    }
}

/// `gcd(numerators) / lcm(denominators)` of a set of rationals.
pub(crate) fn content<'a>(qs: impl Iterator<Item = &'a Rational>) -> Rational {
    let mut num = num_bigint::BigInt::zero();
    let mut den = num_bigint::BigInt::one();
    for q in qs {
        num = num.gcd(q.numer());
        den = den.lcm(q.denom());
    }
    Rational::new(num, den)
}

/// Ring `Q[x_1..x_n, z_1..z_n]` for Noetherian multipliers.
pub fn multiplier_ring(ring: &Ring<Rationals>) -> Ring<Rationals> {
    let mut names: Vec<String> = ring.names().to_vec();
    names.extend(ring.names().iter().map(|s| z_name(s)));
    PolyRing::new(Rationals, names, MonomialOrder::GrevLex)
}

/// `x3 ↦ z3`; other names get a `z_` prefix.
pub fn z_name(x: &str) -> String {
    match x.strip_prefix('x') {
        Some(rest) => format!("z{rest}"),
        None => format!("z_{x}"),
    }
}

struct OpTarget<'a>(&'a Ring<Rationals>);

impl EvalTarget for OpTarget<'_> {
    type Value = DiffOp;

    fn number(&self, q: &Rational) -> DiffOp {
        DiffOp::from_poly(&crate::poly::constant(self.0, q.clone()))
    }

    fn variable(&self, name: &str, offset: usize) -> Result<DiffOp> {
        if let Some(i) = self.0.var_index(name) {
            return Ok(DiffOp::from_poly(&crate::poly::var(self.0, i)));
        }
        if let Some(i) = name.strip_prefix('d').and_then(|v| self.0.var_index(v)) {
            return Ok(DiffOp::dx(self.0, i));
        }
        Err(Error::Parse {
            offset,
            message: format!("unknown symbol `{name}`"),
        })
    }

    fn add(&self, a: &DiffOp, b: &DiffOp) -> DiffOp {
        a.add(b)
    }

    fn mul(&self, a: &DiffOp, b: &DiffOp) -> DiffOp {
        a.mul(b)
    }

    fn neg(&self, a: &DiffOp) -> DiffOp {
        a.neg()
    }

    fn as_constant(&self, a: &DiffOp) -> Option<Rational> {
        match a.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(b, c)] if b.is_one() && c.is_constant() => Some(c.lc().clone()),
            _ => None,
        }
    }
}

fn dx_text(b: &Monomial, names: &[String]) -> String {
    let dnames: Vec<String> = names.iter().map(|n| format!("d{n}")).collect();
    let mut s = String::new();
    b.fmt_with(&dnames, &mut s).expect("string write");
    s
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let names = self.ring.names();
        let mut first = true;
        for (b, a) in &self.terms {
            let d = dx_text(b, names);
            if b.is_one() {
                // a bare polynomial: its own terms, signs included
                for (m, q) in a.terms() {
                    let mut ms = String::new();
                    m.fmt_with(names, &mut ms)?;
                    write_rational_term(f, q, &ms, first)?;
                    first = false;
                }
                continue;
            }
            if a.len() == 1 {
                let (m, q) = &a.terms()[0];
                let mono = if m.is_one() {
                    d
                } else {
                    let mut ms = String::new();
                    m.fmt_with(names, &mut ms)?;
                    format!("{ms}*{d}")
                };
                write_rational_term(f, q, &mono, first)?;
            } else {
                let mut c = content(a.terms().iter().map(|(_, q)| q));
                if a.lc().is_negative() {
                    c = -c;
                }
                let prim = a.scale(&c.recip());
                let mut body = String::new();
                write!(body, "({prim})*{d}")?;
                write_rational_term(f, &c, &body, first)?;
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An element `Σ c_β ⊗ ∂^β` of the Weyl–Noether module `F ⊗_R D`.
#[derive(Clone, PartialEq, Debug)]
pub struct WeylNoether {
    /// Sorted by decreasing derivative monomial; no zero coefficients.
    terms: Vec<(Monomial, ResidueElement)>,
}

impl WeylNoether {
    fn from_terms(field: &ResidueField, terms: Vec<(Monomial, ResidueElement)>) -> Self {
        let mut acc: Vec<(Monomial, ResidueElement)> = Vec::new();
        for (b, c) in terms {
            match acc.iter_mut().find(|(d, _)| *d == b) {
                Some((_, x)) => *x = field.add(x, &c),
                None => acc.push((b, c)),
            }
        }
        acc.retain(|(_, c)| !field.is_zero(c));
        acc.sort_by(|x, y| dorder(&y.0, &x.0));
        WeylNoether { terms: acc }
    }

    pub fn terms(&self) -> &[(Monomial, ResidueElement)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Left multiplication by a scalar of `F`.
    pub fn scale(&self, field: &ResidueField, c: &ResidueElement) -> Self {
        WeylNoether::from_terms(
            field,
            self.terms.iter().map(|(b, x)| (b.clone(), field.mul(c, x))).collect(),
        )
    }

    pub fn add(&self, field: &ResidueField, other: &WeylNoether) -> Self {
        let mut t = self.terms.clone();
        t.extend(other.terms.iter().cloned());
        WeylNoether::from_terms(field, t)
    }
}

/// Checks that the `F`-span of the images of `ops` in the Weyl–Noether
/// module is closed under right multiplication by every variable, i.e. that
/// the operators describe a primary ideal.
pub fn span_is_bimodule(ops: &[DiffOp], field: &ResidueField, x_to_u: &[Option<usize>]) -> bool {
    if ops.is_empty() {
        return false;
    }
    let n = ops[0].ring().nvars();
    let base: Vec<WeylNoether> = ops.iter().map(|a| a.reduce_to_weyl_noether(field, x_to_u)).collect();
    let mut shifted = Vec::new();
    for a in ops {
        for j in 0..n {
            shifted.push(a.right_mul_var(j).reduce_to_weyl_noether(field, x_to_u));
        }
    }
    let mut cols: Vec<Monomial> = base
        .iter()
        .chain(&shifted)
        .flat_map(|w| w.terms.iter().map(|(b, _)| b.clone()))
        .collect();
    cols.sort_by(|a, b| dorder(b, a));
    cols.dedup();
    let vec_of = |w: &WeylNoether| -> Vec<ResidueElement> {
        let mut v = vec![field.zero(); cols.len()];
        for (b, c) in &w.terms {
            let k = cols.iter().position(|x| x == b).expect("column");
            v[k] = c.clone();
        }
        v
    };
    let mut span = RowEchelon::new(field.clone(), cols.len());
    for w in &base {
        span.insert(&vec_of(w));
    }
    shifted.iter().all(|w| span.contains(&vec_of(w)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn ring(n: usize) -> Ring<Rationals> {
        PolyRing::with_prefix(Rationals, "x", n, MonomialOrder::GrevLex)
    }

    fn op(s: &str, r: &Ring<Rationals>) -> DiffOp {
        DiffOp::parse(s, r).unwrap()
    }

    #[test]
    fn commutation_relation() {
        let r = ring(4);
        assert_eq!(op("dx1", &r).right_mul_var(0), op("x1*dx1+1", &r));
        assert_eq!(op("dx1*x1", &r), op("x1*dx1+1", &r));
        assert_eq!(op("dx1", &r).right_mul_var(2), op("x3*dx1", &r));
    }

    #[test]
    fn euler_operator() {
        let r = ring(2);
        let f = parse_polynomial("x1^5", &r).unwrap();
        assert_eq!(op("x1*dx1", &r).apply(&f), f.scale(&Rational::from_integer(5.into())));
    }

    #[test]
    fn multiplier_round_trip() {
        let r = ring(4);
        let mr = multiplier_ring(&r);
        let a = op("dx1^2-2*x2*dx2", &r);
        let b = a.to_multiplier(&mr);
        assert_eq!(b.to_string(), "z1^2-2*x2*z2");
        assert_eq!(DiffOp::from_multiplier(&r, &b), a);
    }

    #[test]
    fn printing_matches_expected_layout() {
        let r = ring(4);
        let s = "(x4^2+x4)*dx2^2+2*(x4^2+1)*dx2*dx3+(x4+1)*dx3^2+2*dx1";
        let a = op(s, &r);
        assert_eq!(a.to_string(), s);
        assert_eq!(op("1", &r).to_string(), "1");
        assert_eq!(op("dx1^2 - 2 x2 dx2", &r).to_string(), "dx1^2-2*x2*dx2");
        assert_eq!(op("x3*dx1+dx2", &r).to_string(), "x3*dx1+dx2");
        assert_eq!(op("-(x1+1)*dx2", &r).to_string(), "-(x1+1)*dx2");
    }
}
