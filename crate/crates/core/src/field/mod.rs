//! Coefficient fields.
//!
//! A [`Field`] is a ring object: it owns whatever context its elements need
//! (a Gröbner basis for the residue field, a variable ring for rational
//! functions) and performs arithmetic on plain element values. Elements are
//! always kept in a canonical form, so `==` on elements is field equality.

mod linalg;
mod ratfunc;
mod rational;
mod residue;

pub use linalg::{rank, solve_nullspace, LinearSystem, RowEchelon};
pub use ratfunc::{RatFunc, RationalFunctions};
pub use rational::{Rational, Rationals};
pub use residue::{ResidueElement, ResidueField};

use crate::error::Result;
use std::fmt::Debug;

pub trait Field: Clone + Debug + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Multiplicative inverse; fails on zero.
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn from_rational(&self, q: &Rational) -> Self::Elem;

    /// `Some(q)` when `a` lies in the prime field.
    fn as_rational(&self, a: &Self::Elem) -> Option<Rational>;

    /// Human-readable form of a non-rational element; rational elements are
    /// printed by the polynomial printer itself.
    fn format(&self, a: &Self::Elem) -> String;

    /// True when both objects denote the same field (same context).
    fn same_field(&self, other: &Self) -> bool;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn from_int(&self, n: i64) -> Self::Elem {
        self.from_rational(&Rational::from_integer(n.into()))
    }

    /// Rough size measure used for pivot selection. Never affects results.
    fn weight(&self, _a: &Self::Elem) -> usize {
        1
    }
}
