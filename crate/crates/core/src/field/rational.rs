use super::Field;
use crate::error::{Error, Result};
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// The field of rational numbers.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }

    fn one(&self) -> Rational {
        Rational::one()
    }

    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }

    fn neg(&self, a: &Rational) -> Rational {
        -a
    }

    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }

    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }

    fn inv(&self, a: &Rational) -> Result<Rational> {
        if a.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(a.recip())
        }
    }

    fn div(&self, a: &Rational, b: &Rational) -> Result<Rational> {
        if b.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(a / b)
        }
    }

    fn is_one(&self, a: &Rational) -> bool {
        a.is_one()
    }

    fn from_rational(&self, q: &Rational) -> Rational {
        q.clone()
    }

    fn as_rational(&self, a: &Rational) -> Option<Rational> {
        Some(a.clone())
    }

    fn format(&self, a: &Rational) -> String {
        a.to_string()
    }

    fn same_field(&self, _other: &Self) -> bool {
        true
    }

    fn weight(&self, a: &Rational) -> usize {
        (a.numer().bits() + a.denom().bits()) as usize + usize::from(a.is_negative())
    }
}
