//! Sparse multivariate polynomials over a pluggable field.

mod gcd;
mod monomial;
mod order;
mod parse;
mod polynomial;

pub use gcd::{exact_div, gcd};
pub use monomial::{monomials_of_degree, Monomial};
pub use order::MonomialOrder;
pub use parse::{parse_expr, parse_polynomial, parse_polynomial_list, split_top_level, EvalTarget, Expr};
pub use polynomial::{constant, monomial, one, var, zero, CoerceInto, PolyRing, Polynomial, Ring};
pub(crate) use polynomial::write_rational_term;
