//! Ideals, reduced Gröbner bases and the operations built on them.

mod buchberger;
mod ops;
mod truncated;

pub use buchberger::groebner_basis;
pub(crate) use buchberger::Reducers;
pub use ops::{eliminate, independent_set, intersect, saturate, saturate_by_var, saturate_general};
pub use truncated::truncated_groebner;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};
use std::fmt;

/// A finitely generated ideal; zero generators are dropped.
#[derive(Clone)]
pub struct Ideal<F: Field> {
    ring: Ring<F>,
    gens: Vec<Polynomial<F>>,
}

impl<F: Field> Ideal<F> {
    pub fn new(ring: &Ring<F>, gens: impl IntoIterator<Item = Polynomial<F>>) -> Result<Self> {
        let gens: Vec<_> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        for g in &gens {
            if !g.ring().compatible(ring) {
                return Err(Error::MismatchedRings);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens,
        })
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    /// Reduced Gröbner basis in the ring's own order.
    pub fn groebner(&self) -> GroebnerBasis<F> {
        GroebnerBasis::compute(&self.ring, &self.gens)
    }

    /// Reduced Gröbner basis in another order.
    pub fn groebner_in(&self, order: MonomialOrder) -> GroebnerBasis<F> {
        if order == self.ring.order() {
            return self.groebner();
        }
        let ring = self.ring.with_order(order);
        let gens: Vec<_> = self.gens.iter().map(|g| g.to_ring(&ring)).collect();
        GroebnerBasis::compute(&ring, &gens)
    }

    pub fn contains(&self, f: &Polynomial<F>) -> bool {
        self.groebner().contains(f)
    }

    /// Ideal equality via reduced Gröbner bases.
    pub fn equals(&self, other: &Ideal<F>) -> bool {
        let a = self.groebner();
        let b = other.groebner_in(self.ring.order());
        a.elems == b.elems
    }

    pub fn sum(&self, other: &Ideal<F>) -> Ideal<F> {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.iter().chain(&other.gens).cloned().collect(),
        }
    }

    pub fn product(&self, other: &Ideal<F>) -> Ideal<F> {
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a * b);
            }
        }
        Ideal {
            ring: self.ring.clone(),
            gens,
        }
    }

    pub fn power(&self, r: u32) -> Ideal<F> {
        let mut acc = Ideal {
            ring: self.ring.clone(),
            gens: vec![crate::poly::one(&self.ring)],
        };
        for _ in 0..r {
            acc = acc.product(self);
            acc = Ideal {
                ring: acc.ring.clone(),
                gens: acc.groebner().elems,
            };
        }
        acc
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| {
            let d = g.lm().degree();
            g.terms().iter().all(|(m, _)| m.degree() == d)
        })
    }

    /// A generating set with no redundant element, drawn from the reduced
    /// Gröbner basis. For homogeneous ideals the elements are scanned by
    /// increasing degree, which makes the result minimal in size.
    pub fn minimal_generators(&self) -> Ideal<F> {
        let mut cands = self.groebner().elems;
        let homogeneous = self.is_homogeneous();
        if homogeneous {
            cands.sort_by_key(|g| g.lm().degree());
        }
        let mut kept: Vec<Polynomial<F>> = Vec::new();
        if homogeneous {
            for g in cands {
                if kept.is_empty() || !GroebnerBasis::compute(&self.ring, &kept).contains(&g) {
                    kept.push(g);
                }
            }
        } else {
            kept = cands;
            let mut i = kept.len();
            while i > 0 {
                i -= 1;
                let rest: Vec<_> = kept.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g.clone()).collect();
                if !rest.is_empty() && GroebnerBasis::compute(&self.ring, &rest).contains(&kept[i]) {
                    kept.remove(i);
                }
            }
        }
        Ideal {
            ring: self.ring.clone(),
            gens: kept,
        }
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl<F: Field> fmt::Display for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{self}>")
    }
}

/// A reduced Gröbner basis: monic, inter-reduced, sorted by decreasing
/// leading monomial in the order of its ring.
#[derive(Clone)]
pub struct GroebnerBasis<F: Field> {
    ring: Ring<F>,
    elems: Vec<Polynomial<F>>,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn compute(ring: &Ring<F>, gens: &[Polynomial<F>]) -> Self {
        GroebnerBasis {
            ring: ring.clone(),
            elems: groebner_basis(ring, gens),
        }
    }

    /// Wraps polynomials already known to form a reduced basis.
    pub(crate) fn from_reduced(ring: &Ring<F>, elems: Vec<Polynomial<F>>) -> Self {
        GroebnerBasis {
            ring: ring.clone(),
            elems,
        }
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn elems(&self) -> &[Polynomial<F>] {
        &self.elems
    }

    pub fn into_ideal(self) -> Ideal<F> {
        Ideal {
            ring: self.ring,
            gens: self.elems,
        }
    }

    pub fn ideal(&self) -> Ideal<F> {
        self.clone().into_ideal()
    }

    pub fn is_unit(&self) -> bool {
        self.elems.iter().any(|g| g.lm().is_one())
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elems.iter().map(|g| g.lm().clone()).collect()
    }

    fn adopt(&self, f: &Polynomial<F>) -> Polynomial<F> {
        if std::sync::Arc::ptr_eq(f.ring(), &self.ring) || f.ring().compatible(&self.ring) {
            f.clone()
        } else {
            f.to_ring(&self.ring)
        }
    }

    /// Remainder of `f` on division by the basis. `f` may come from a ring
    /// that differs only in term order.
    pub fn normal_form(&self, f: &Polynomial<F>) -> Polynomial<F> {
        let f = self.adopt(f);
        Reducers::new(self.elems.iter()).reduce(&f)
    }

    pub fn contains(&self, f: &Polynomial<F>) -> bool {
        let f = self.adopt(f);
        Reducers::new(self.elems.iter()).top_reduce(&f).is_zero()
    }

    pub fn is_zero_dimensional(&self) -> bool {
        let n = self.ring.nvars();
        (0..n).all(|i| {
            self.elems.iter().any(|g| {
                let m = g.lm();
                m.support().all(|j| j == i)
            })
        })
    }

    /// Monomials outside the leading-term staircase, in increasing order.
    pub fn standard_monomials(&self) -> Result<Vec<Monomial>> {
        if self.is_unit() {
            return Ok(Vec::new());
        }
        if !self.is_zero_dimensional() {
            return Err(Error::NotZeroDimensional);
        }
        let n = self.ring.nvars();
        let lms = self.leading_monomials();
        let mut out = Vec::new();
        let mut frontier = vec![Monomial::one(n)];
        let mut seen = std::collections::HashSet::new();
        while let Some(m) = frontier.pop() {
            if !seen.insert(m.clone()) || lms.iter().any(|l| l.divides(&m)) {
                continue;
            }
            for i in 0..n {
                let mut next = m.clone();
                next.set_exp(i, m.exp(i) + 1);
                frontier.push(next);
            }
            out.push(m);
        }
        out.sort_by(|a, b| self.ring.cmp(a, b));
        Ok(out)
    }

    /// Number of standard monomials (the vector-space dimension of the quotient).
    pub fn colength(&self) -> Result<usize> {
        Ok(self.standard_monomials()?.len())
    }

    /// Every S-polynomial reduces to zero.
    pub fn is_groebner(&self) -> bool {
        let red = Reducers::new(self.elems.iter());
        for i in 0..self.elems.len() {
            for j in i + 1..self.elems.len() {
                let (f, g) = (&self.elems[i], &self.elems[j]);
                let l = f.lm().lcm(g.lm());
                let a = l.div(f.lm()).unwrap();
                let b = l.div(g.lm()).unwrap();
                let field = f.field();
                let s = &f.mul_term(&a, &field.inv(f.lc()).unwrap())
                    - &g.mul_term(&b, &field.inv(g.lc()).unwrap());
                if !red.reduce(&s).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

impl<F: Field> fmt::Debug for GroebnerBasis<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GB{:?}", self.elems)
    }
}

/// Colength of a zero-dimensional ideal in its ring's order.
pub fn colength<F: Field>(ideal: &Ideal<F>) -> Result<usize> {
    ideal.groebner().colength()
}
