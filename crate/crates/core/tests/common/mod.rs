#![allow(dead_code)]

pub mod checks;

use noether::field::{Field, Rational, Rationals};
use noether::groebner::Ideal;
use noether::poly::{parse_polynomial, parse_polynomial_list, Monomial, MonomialOrder, PolyRing, Polynomial, Ring};
use rand::Rng;
use noether::primary::Scene;
use noether::weyl::DiffOp;
use std::sync::Arc;

pub fn ring(n: usize) -> Ring<Rationals> {
    PolyRing::new(Rationals, (1..=n).map(|i| format!("x{i}")).collect(), MonomialOrder::GrevLex)
}

pub fn ideal(r: &Ring<Rationals>, text: &str) -> Ideal<Rationals> {
    Ideal::new(r, parse_polynomial_list(text, r).unwrap()).unwrap()
}

pub fn poly(r: &Ring<Rationals>, text: &str) -> Polynomial<Rationals> {
    parse_polynomial(text, r).unwrap()
}

/// A random polynomial with up to `terms` terms of degree at most `deg` and
/// integer coefficients in `[-c, c]`.
pub fn random_poly(rng: &mut impl Rng, r: &Ring<Rationals>, terms: usize, deg: u32, c: i64) -> Polynomial<Rationals> {
    let n = r.nvars();
    let t = (0..rng.gen_range(0..=terms))
        .map(|_| {
            let total = rng.gen_range(0..=deg);
            let mut e = vec![0u16; n];
            for _ in 0..total {
                e[rng.gen_range(0..n)] += 1;
            }
            (Monomial::new(e), Rationals.from_int(rng.gen_range(-c..=c)))
        })
        .collect();
    Polynomial::from_terms(r, t)
}

pub fn ops(r: &Ring<Rationals>, texts: &[&str]) -> Vec<DiffOp> {
    texts.iter().map(|t| DiffOp::parse(t, r).unwrap()).collect()
}

pub fn scene(p: &Ideal<Rationals>) -> Arc<Scene> {
    Arc::new(Scene::new(p).unwrap())
}

pub const TWISTED_CUBIC: &str = "x1^2-x2*x3, x1*x2-x3*x4, x2^2-x1*x4";

/// The multiplicity-3 primary ideal over the twisted cubic cone.
pub const TWISTED_CUBIC_Q: &str = "3*x1^2*x2^2-x2^3*x3-x1^3*x4-3*x1*x2*x3*x4+2*x3^2*x4^2, \
3*x1^3*x2*x4-3*x1*x2^2*x3*x4-3*x1^2*x3*x4^2+3*x2*x3^2*x4^2+2*x2^3-2*x3*x4^2, \
3*x2^4*x3-6*x1*x2^2*x3*x4+3*x1^2*x3*x4^2+x2^3-x3*x4^2, \
4*x1*x2^3*x3+x1^4*x4-6*x1^2*x2*x3*x4-3*x2^2*x3^2*x4+4*x1*x3^2*x4^2, \
x2^5-x1*x2^3*x4-x2^2*x3*x4^2+x1*x3*x4^3, \
x1*x2^4-x2^3*x3*x4-x1*x2*x3*x4^2+x3^2*x4^3, \
x1^4*x2-x2^3*x3^2-2*x1^3*x3*x4+2*x1*x2*x3^2*x4, \
x1^5-4*x1^3*x2*x3+3*x1*x2^2*x3^2+2*x1^2*x3^2*x4-2*x2*x3^3*x4, \
3*x1^4*x4^2-6*x1^2*x2*x3*x4^2+3*x2^2*x3^2*x4^2+4*x2^4-4*x2*x3*x4^2, \
x2^3*x3^2*x4+x1^3*x3*x4^2-3*x1*x2*x3^2*x4^2+x3^3*x4^3+x1*x2^3-x1*x3*x4^2, \
3*x1^4*x3*x4-6*x1^2*x2*x3^2*x4+3*x2^2*x3^3*x4+2*x1^3*x2+6*x1*x2^2*x3-6*x1^2*x3*x4-2*x2*x3^2*x4, \
4*x2^3*x3^3+4*x1^3*x3^2*x4-12*x1*x2*x3^3*x4+4*x3^4*x4^2-x1^4+6*x1^2*x2*x3+3*x2^2*x3^2-8*x1*x3^2*x4";

pub const TWISTED_CUBIC_OPS: [&str; 3] = ["1", "dx1", "dx1^2-2*x2*dx2"];

/// A multiplicity-4 ideal primary to the x4-axis, needing a second-order
/// operator with coefficients in x4.
pub const LINE_Q: &str = "x1^2, x1*x2, x1*x3, x1*x4-x3^2+x1, x3^2*x4-x2^2, x3^2*x4-x3^2-x2*x3+2*x1";
pub const LINE_P: &str = "x1, x2, x3";
pub const LINE_OP: &str = "(x4^2+x4)*dx2^2+2*(x4^2+1)*dx2*dx3+(x4+1)*dx3^2+2*dx1";
/// The same ideal as the backward algorithm prints it.
pub const LINE_BACK: &str = "x3^2-x1*x4-x1, x1*x3, x2^2-x2*x3-x1*x4+x1, x1*x2, x1^2, x1*x4^2-x2*x3+x1";

pub const PALAMODOV_Q: &str = "x1^2, x2^2, x1-x2*x3";
pub const PALAMODOV_P: &str = "x1, x2";
