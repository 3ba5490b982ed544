use super::{Monomial, MonomialOrder};
use crate::error::{Error, Result};
use crate::field::{Field, Rational};
use num_traits::{One, Signed};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt::{self, Write as _};
use std::sync::Arc;

/// A polynomial ring `K[x_1..x_n]` with a fixed term order.
#[derive(Debug)]
pub struct PolyRing<F: Field> {
    names: Vec<String>,
    order: MonomialOrder,
    field: F,
}

pub type Ring<F> = Arc<PolyRing<F>>;

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, names: Vec<String>, order: MonomialOrder) -> Ring<F> {
        Arc::new(PolyRing {
            names,
            order,
            field,
        })
    }

    /// Ring with names `prefix1 .. prefixN`.
    pub fn with_prefix(field: F, prefix: &str, n: usize, order: MonomialOrder) -> Ring<F> {
        Self::new(
            field,
            (1..=n).map(|i| format!("{prefix}{i}")).collect(),
            order,
        )
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Same variables and field, different term order.
    pub fn with_order(&self, order: MonomialOrder) -> Ring<F> {
        Self::new(self.field.clone(), self.names.clone(), order)
    }

    pub fn compatible(&self, other: &Self) -> bool {
        std::ptr::eq(self, other)
            || (self.order == other.order
                && self.names == other.names
                && self.field.same_field(&other.field))
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }
}

pub fn zero<F: Field>(ring: &Ring<F>) -> Polynomial<F> {
    Polynomial {
        ring: ring.clone(),
        terms: Vec::new(),
    }
}

pub fn constant<F: Field>(ring: &Ring<F>, c: F::Elem) -> Polynomial<F> {
    Polynomial::from_terms(ring, vec![(Monomial::one(ring.nvars()), c)])
}

pub fn one<F: Field>(ring: &Ring<F>) -> Polynomial<F> {
    constant(ring, ring.field.one())
}

pub fn var<F: Field>(ring: &Ring<F>, i: usize) -> Polynomial<F> {
    Polynomial {
        ring: ring.clone(),
        terms: vec![(Monomial::var(ring.nvars(), i), ring.field.one())],
    }
}

pub fn monomial<F: Field>(ring: &Ring<F>, m: Monomial, c: F::Elem) -> Polynomial<F> {
    Polynomial::from_terms(ring, vec![(m, c)])
}

/// Sparse polynomial; terms are kept sorted in decreasing ring order with
/// no zero coefficients.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    ring: Ring<F>,
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<F: Field> Polynomial<F> {
    /// Builds a normalized polynomial from arbitrary terms (unsorted,
    /// possibly repeated, possibly zero).
    pub fn from_terms(ring: &Ring<F>, terms: Vec<(Monomial, F::Elem)>) -> Self {
        let field = &ring.field;
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), ring.nvars());
            match acc.get_mut(&m) {
                Some(e) => *e = field.add(e, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
        terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Trusts the caller that `terms` are sorted and nonzero.
    pub(crate) fn from_sorted(ring: &Ring<F>, terms: Vec<(Monomial, F::Elem)>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        &self.ring.field
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F::Elem)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.field().is_one(&self.terms[0].1)
    }

    /// Constant term (zero if absent).
    pub fn constant_coeff(&self) -> F::Elem {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => self.field().zero(),
        }
    }

    pub fn coeff(&self, m: &Monomial) -> F::Elem {
        match self.terms.binary_search_by(|(t, _)| self.ring.cmp(m, t)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => self.field().zero(),
        }
    }

    /// Leading term in the ring's own order.
    pub fn leading_term(&self) -> Result<(&Monomial, &F::Elem)> {
        self.terms
            .first()
            .map(|(m, c)| (m, c))
            .ok_or(Error::ZeroPolynomial)
    }

    /// Leading term with respect to an arbitrary order.
    pub fn leading_term_in(&self, order: MonomialOrder) -> Result<(&Monomial, &F::Elem)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(&a.0, &b.0))
            .map(|(m, c)| (m, c))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &F::Elem {
        &self.terms[0].1
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn degree_in(&self, i: usize) -> u16 {
        self.terms.iter().map(|(m, _)| m.exp(i)).max().unwrap_or(0)
    }

    /// Variables that actually occur.
    pub fn variables(&self) -> Vec<usize> {
        let mut used = vec![false; self.ring.nvars()];
        for (m, _) in &self.terms {
            for i in m.support() {
                used[i] = true;
            }
        }
        (0..used.len()).filter(|&i| used[i]).collect()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring.compatible(&other.ring) {
            Ok(())
        } else {
            Err(Error::MismatchedRings)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let field = self.field();
        let ring = &self.ring;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match ring.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { field.neg(&b[j].1) } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        field.sub(&a[i].1, &b[j].1)
                    } else {
                        field.add(&a[i].1, &b[j].1)
                    };
                    if !field.is_zero(&c) {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate { field.neg(&t.1) } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        Polynomial::from_sorted(ring, out)
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return zero(&self.ring);
        }
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.len() == 1 {
            let (m, c) = &small.terms[0];
            return large.mul_term(m, c);
        }
        let field = self.field();
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                let m = ma.mul(mb);
                let c = field.mul(ca, cb);
                match acc.get_mut(&m) {
                    Some(e) => *e = field.add(e, &c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
        terms.sort_by(|a, b| self.ring.cmp(&b.0, &a.0));
        Polynomial::from_sorted(&self.ring, terms)
    }

    /// `c * m * self`; order is preserved by multiplicativity.
    pub fn mul_term(&self, m: &Monomial, c: &F::Elem) -> Self {
        let field = self.field();
        if field.is_zero(c) {
            return zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(t, d)| (t.mul(m), field.mul(c, d)))
            .collect();
        Polynomial::from_sorted(&self.ring, terms)
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let field = self.field();
        if field.is_zero(c) {
            return zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(t, d)| (t.clone(), field.mul(c, d)))
            .collect();
        Polynomial::from_sorted(&self.ring, terms)
    }

    pub fn neg(&self) -> Self {
        let field = self.field();
        let terms = self
            .terms
            .iter()
            .map(|(t, d)| (t.clone(), field.neg(d)))
            .collect();
        Polynomial::from_sorted(&self.ring, terms)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) if self.field().is_one(c) => self.clone(),
            Some((_, c)) => self.scale(&self.field().inv(c).expect("nonzero lc")),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = one(&self.ring);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul_unchecked(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        result
    }

    pub fn partial_derivative(&self, i: usize) -> Self {
        let field = self.field();
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exp(i);
            if e == 0 {
                continue;
            }
            let mut d = m.clone();
            d.set_exp(i, e - 1);
            let c = field.mul(c, &field.from_int(e as i64));
            if !field.is_zero(&c) {
                terms.push((d, c));
            }
        }
        // Dividing every surviving term by x_i keeps the order.
        Polynomial::from_sorted(&self.ring, terms)
    }

    /// Iterated partial derivative `∂^β`.
    pub fn derivative(&self, beta: &[u16]) -> Self {
        let field = self.field();
        let mut terms = Vec::new();
        'outer: for (m, c) in &self.terms {
            let mut d = m.clone();
            let mut factor: i64 = 1;
            for (i, &b) in beta.iter().enumerate() {
                let e = m.exp(i);
                if e < b {
                    continue 'outer;
                }
                for k in 0..b {
                    factor *= (e - k) as i64;
                }
                d.set_exp(i, e - b);
            }
            terms.push((d, field.mul(c, &field.from_int(factor))));
        }
        Polynomial::from_sorted(&self.ring, terms)
    }

    /// Ring homomorphism into `target` sending variable `i` to `images[i]`.
    pub fn substitute<G>(&self, target: &Ring<G>, images: &[Option<Polynomial<G>>]) -> Result<Polynomial<G>>
    where
        G: Field,
        F: CoerceInto<G>,
    {
        let tf = target.field();
        let mut power_cache: Vec<Vec<Polynomial<G>>> = vec![Vec::new(); self.ring.nvars()];
        let mut acc: HashMap<Monomial, G::Elem> = HashMap::new();
        for (m, c) in &self.terms {
            let mut term = constant(target, F::coerce(self.field(), c, tf));
            for i in m.support() {
                let img = images
                    .get(i)
                    .and_then(|o| o.as_ref())
                    .ok_or_else(|| Error::UnmappedVariable(self.ring.names[i].clone()))?;
                if !Arc::ptr_eq(img.ring(), target) && !img.ring().compatible(target) {
                    return Err(Error::MismatchedRings);
                }
                let e = m.exp(i) as usize;
                let cache = &mut power_cache[i];
                if cache.is_empty() {
                    cache.push(one(target));
                }
                while cache.len() <= e {
                    let next = cache.last().unwrap().mul_unchecked(img);
                    cache.push(next);
                }
                term = term.mul_unchecked(&cache[e]);
            }
            for (tm, tc) in term.terms {
                match acc.get_mut(&tm) {
                    Some(x) => *x = tf.add(x, &tc),
                    None => {
                        acc.insert(tm, tc);
                    }
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !tf.is_zero(c)).collect();
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Moves the polynomial into `target`, sending variable `i` to variable
    /// `mapping[i]`. Every occurring variable must be mapped.
    pub fn rename<G>(&self, target: &Ring<G>, mapping: &[Option<usize>]) -> Result<Polynomial<G>>
    where
        G: Field,
        F: CoerceInto<G>,
    {
        let n = target.nvars();
        let tf = target.field();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut t = Monomial::one(n);
            for i in m.support() {
                let j = mapping
                    .get(i)
                    .copied()
                    .flatten()
                    .ok_or_else(|| Error::UnmappedVariable(self.ring.names[i].clone()))?;
                t.set_exp(j, t.exp(j) + m.exp(i));
            }
            terms.push((t, F::coerce(self.field(), c, tf)));
        }
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Same polynomial in a ring differing only in term order.
    pub fn to_ring(&self, target: &Ring<F>) -> Self {
        debug_assert_eq!(target.nvars(), self.ring.nvars());
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| target.cmp(&b.0, &a.0));
        Polynomial::from_sorted(target, terms)
    }

    /// Applies `f` to each coefficient, landing in `target` (same variables).
    pub fn map_coeffs<G: Field>(&self, target: &Ring<G>, f: impl Fn(&F::Elem) -> G::Elem) -> Polynomial<G> {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), f(c))).collect();
        Polynomial::from_terms(target, terms)
    }

    pub fn evaluate(&self, point: &[F::Elem]) -> F::Elem {
        let field = self.field();
        let mut total = field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for i in m.support() {
                for _ in 0..m.exp(i) {
                    t = field.mul(&t, &point[i]);
                }
            }
            total = field.add(&total, &t);
        }
        total
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

/// Coefficient coercion between fields (e.g. `Q → K(U)`).
pub trait CoerceInto<G: Field>: Field {
    fn coerce(from: &Self, c: &Self::Elem, to: &G) -> G::Elem;
}

impl<F: Field> CoerceInto<F> for F {
    fn coerce(_from: &F, c: &F::Elem, _to: &F) -> F::Elem {
        c.clone()
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Prints a rational coefficient times a monomial string, as one signed term.
pub(crate) fn write_rational_term(
    out: &mut impl fmt::Write,
    q: &Rational,
    mono: &str,
    first: bool,
) -> fmt::Result {
    let neg = q.is_negative();
    if neg {
        out.write_char('-')?;
    } else if !first {
        out.write_char('+')?;
    }
    let a = q.abs();
    if mono == "1" {
        write!(out, "{a}")
    } else if a.is_one() {
        out.write_str(mono)
    } else {
        write!(out, "{a}*{mono}")
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let field = self.field();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let mut mono = String::new();
            m.fmt_with(&self.ring.names, &mut mono)?;
            match field.as_rational(c) {
                Some(q) => write_rational_term(f, &q, &mono, k == 0)?,
                None => {
                    if k > 0 {
                        f.write_char('+')?;
                    }
                    write!(f, "({})", field.format(c))?;
                    if mono != "1" {
                        write!(f, "*{mono}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $inner:ident) => {
        impl<'a, F: Field> std::ops::$tr<&'a Polynomial<F>> for &'a Polynomial<F> {
            type Output = Polynomial<F>;
            /// Panics when the operands live in different rings; use the
            /// `try_` variants for a checked operation.
            fn $m(self, rhs: &'a Polynomial<F>) -> Polynomial<F> {
                self.check(rhs).expect("polynomials from different rings");
                self.$inner(rhs)
            }
        }
        impl<F: Field> std::ops::$tr<Polynomial<F>> for Polynomial<F> {
            type Output = Polynomial<F>;
            fn $m(self, rhs: Polynomial<F>) -> Polynomial<F> {
                std::ops::$tr::$m(&self, &rhs)
            }
        }
    };
}

impl<F: Field> Polynomial<F> {
    fn add_unchecked(&self, other: &Self) -> Self {
        self.merge(other, false)
    }
    fn sub_unchecked(&self, other: &Self) -> Self {
        self.merge(other, true)
    }
}

binop!(Add, add, add_unchecked);
binop!(Sub, sub, sub_unchecked);
binop!(Mul, mul, mul_unchecked);

impl<F: Field> std::ops::Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial::neg(self)
    }
}
