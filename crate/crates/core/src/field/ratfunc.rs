use super::{Field, Rational, Rationals};
use crate::error::{Error, Result};
use crate::poly::{constant, exact_div, gcd, one, CoerceInto, Polynomial, Ring};

type QPoly = Polynomial<Rationals>;

/// A rational function `num/den` in lowest terms with monic denominator.
#[derive(Clone, Debug, PartialEq)]
pub struct RatFunc {
    num: QPoly,
    den: QPoly,
}

impl RatFunc {
    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }
}

/// The field `K(U)` of rational functions in the variables of a ring.
#[derive(Clone, Debug)]
pub struct RationalFunctions {
    ring: Ring<Rationals>,
}

impl RationalFunctions {
    pub fn new(ring: Ring<Rationals>) -> Self {
        RationalFunctions { ring }
    }

    pub fn ring(&self) -> &Ring<Rationals> {
        &self.ring
    }

    pub fn from_poly(&self, p: QPoly) -> RatFunc {
        RatFunc {
            num: p,
            den: one(&self.ring),
        }
    }

    /// `num/den`, brought to lowest terms.
    pub fn fraction(&self, num: QPoly, den: QPoly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.normalize(num, den))
    }

    fn normalize(&self, num: QPoly, den: QPoly) -> RatFunc {
        if num.is_zero() {
            return self.zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    exact_div(&num, &g).expect("gcd divides"),
                    exact_div(&den, &g).expect("gcd divides"),
                )
            }
        };
        let lc = den.lc().clone();
        if lc == Rational::from_integer(1.into()) {
            RatFunc { num, den }
        } else {
            let inv = lc.recip();
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }
}

impl Field for RationalFunctions {
    type Elem = RatFunc;

    fn zero(&self) -> RatFunc {
        RatFunc {
            num: crate::poly::zero(&self.ring),
            den: one(&self.ring),
        }
    }

    fn one(&self) -> RatFunc {
        self.from_poly(one(&self.ring))
    }

    fn is_zero(&self, a: &RatFunc) -> bool {
        a.num.is_zero()
    }

    fn add(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        if a.num.is_zero() {
            return b.clone();
        }
        if b.num.is_zero() {
            return a.clone();
        }
        if a.den == b.den {
            let num = &a.num + &b.num;
            if a.den.is_one() {
                return RatFunc { num, den: a.den.clone() };
            }
            return self.normalize(num, a.den.clone());
        }
        let g = gcd(&a.den, &b.den);
        let bd = exact_div(&b.den, &g).expect("gcd divides");
        let ad = exact_div(&a.den, &g).expect("gcd divides");
        let num = &(&a.num * &bd) + &(&b.num * &ad);
        let den = &a.den * &bd;
        self.normalize(num, den)
    }

    fn neg(&self, a: &RatFunc) -> RatFunc {
        RatFunc {
            num: a.num.neg(),
            den: a.den.clone(),
        }
    }

    fn mul(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        if a.num.is_zero() || b.num.is_zero() {
            return self.zero();
        }
        if a.den.is_one() && b.den.is_one() {
            return RatFunc {
                num: &a.num * &b.num,
                den: a.den.clone(),
            };
        }
        // cross-cancel before multiplying
        let g1 = gcd(&a.num, &b.den);
        let g2 = gcd(&b.num, &a.den);
        let an = exact_div(&a.num, &g1).expect("gcd divides");
        let bd = exact_div(&b.den, &g1).expect("gcd divides");
        let bn = exact_div(&b.num, &g2).expect("gcd divides");
        let ad = exact_div(&a.den, &g2).expect("gcd divides");
        let num = &an * &bn;
        let den = &ad * &bd;
        let lc = den.lc().clone();
        if lc == Rational::from_integer(1.into()) {
            RatFunc { num, den }
        } else {
            let inv = lc.recip();
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    fn inv(&self, a: &RatFunc) -> Result<RatFunc> {
        if a.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.normalize(a.den.clone(), a.num.clone()))
    }

    fn from_rational(&self, q: &Rational) -> RatFunc {
        if q == &Rational::from_integer(0.into()) {
            return self.zero();
        }
        self.from_poly(constant(&self.ring, q.clone()))
    }

    fn as_rational(&self, a: &RatFunc) -> Option<Rational> {
        if a.num.is_zero() {
            return Some(Rational::from_integer(0.into()));
        }
        (a.den.is_one() && a.num.is_constant()).then(|| a.num.lc().clone())
    }

    fn format(&self, a: &RatFunc) -> String {
        if a.den.is_one() {
            a.num.to_string()
        } else if a.num.len() == 1 {
            format!("{}/({})", a.num, a.den)
        } else {
            format!("({})/({})", a.num, a.den)
        }
    }

    fn same_field(&self, other: &Self) -> bool {
        self.ring.compatible(&other.ring)
    }

    fn weight(&self, a: &RatFunc) -> usize {
        a.num.len() + a.den.len()
    }
}

impl CoerceInto<RationalFunctions> for Rationals {
    fn coerce(_from: &Rationals, c: &Rational, to: &RationalFunctions) -> RatFunc {
        to.from_rational(c)
    }
}
