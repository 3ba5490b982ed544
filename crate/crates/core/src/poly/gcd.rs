//! Exact division and GCD for polynomials over the rationals, used to keep
//! rational functions in lowest terms.

use super::polynomial::{one, zero, Polynomial};
use super::Monomial;
use crate::field::Rationals;

type QPoly = Polynomial<Rationals>;

/// `a / b` when `b` divides `a` exactly.
pub fn exact_div(a: &QPoly, b: &QPoly) -> Option<QPoly> {
    if b.is_zero() {
        return None;
    }
    let ring = a.ring();
    let (bm, bc) = (b.lm().clone(), b.lc().clone());
    let mut r = a.clone();
    let mut q = Vec::new();
    while !r.is_zero() {
        let m = r.lm().div(&bm)?;
        let c = r.lc() / &bc;
        r = &r - &b.mul_term(&m, &c);
        q.push((m, c));
    }
    Some(Polynomial::from_terms(ring, q))
}

/// Coefficients of `a` viewed as a polynomial in variable `v`, indexed by degree.
fn coeffs_in(a: &QPoly, v: usize) -> Vec<QPoly> {
    let d = a.degree_in(v) as usize;
    let mut buckets: Vec<Vec<(Monomial, _)>> = vec![Vec::new(); d + 1];
    for (m, c) in a.terms() {
        let e = m.exp(v) as usize;
        let mut m = m.clone();
        m.set_exp(v, 0);
        buckets[e].push((m, c.clone()));
    }
    buckets
        .into_iter()
        .map(|t| Polynomial::from_terms(a.ring(), t))
        .collect()
}

fn content_in(a: &QPoly, v: usize) -> QPoly {
    let mut g = zero(a.ring());
    for c in coeffs_in(a, v) {
        if c.is_zero() {
            continue;
        }
        g = gcd(&g, &c);
        if g.is_constant() {
            break;
        }
    }
    g
}

fn lead_in(a: &QPoly, v: usize) -> QPoly {
    coeffs_in(a, v).pop().unwrap_or_else(|| zero(a.ring()))
}

/// `a` divided by the gcd of its numerators over the lcm of its
/// denominators, so that its coefficients are coprime integers.
fn primitive_q(a: &QPoly) -> QPoly {
    let c = crate::weyl::content(a.terms().iter().map(|(_, c)| c));
    if num_traits::Zero::is_zero(&c) || num_traits::One::is_one(&c) {
        return a.clone();
    }
    a.scale(&num_traits::Inv::inv(c))
}

/// A multiple of the pseudo-remainder of `a` by `b` with respect to `v`.
fn prem(a: &QPoly, b: &QPoly, v: usize) -> QPoly {
    let db = b.degree_in(v);
    let lb = lead_in(b, v);
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lr = lead_in(&r, v);
        let mut shift = Monomial::one(a.ring().nvars());
        shift.set_exp(v, dr - db);
        let sub = (&lr * b).mul_term(&shift, &num_traits::One::one());
        r = primitive_q(&(&(&lb * &r) - &sub));
    }
    r
}

/// True when some specialization of the variables other than `v` keeps both
/// leading coefficients in `v` nonzero and leaves univariate images with a
/// constant gcd. Specialization can only raise the degree of the gcd, so the
/// true gcd then has degree 0 in `v`.
fn coprime_image(a: &QPoly, b: &QPoly, v: usize) -> bool {
    let ring = a.ring();
    let n = ring.nvars();
    if n == 1 {
        return false;
    }
    let (la, lb) = (lead_in(a, v), lead_in(b, v));
    for shift in 0..3i64 {
        let images: Vec<Option<QPoly>> = (0..n)
            .map(|i| {
                Some(if i == v {
                    super::polynomial::var(ring, v)
                } else {
                    let k = 2 + 3 * i as i64 + 7 * shift;
                    super::polynomial::constant(ring, crate::field::Rational::from_integer(k.into()))
                })
            })
            .collect();
        let at = |f: &QPoly| f.substitute(ring, &images).expect("same ring");
        if at(&la).is_zero() || at(&lb).is_zero() {
            continue;
        }
        let (mut x, mut y) = (primitive_q(&at(a)), primitive_q(&at(b)));
        if x.degree_in(v) < y.degree_in(v) {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_zero() && y.degree_in(v) > 0 {
            let r = prem(&x, &y, v);
            x = y;
            y = r;
        }
        return !y.is_zero();
    }
    false
}

/// Monic greatest common divisor (zero only when both inputs are zero).
pub fn gcd(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return one(a.ring());
    }
    let va = a.variables();
    let vb = b.variables();
    let v = *va.iter().chain(vb.iter()).max().unwrap();
    let in_a = va.contains(&v);
    let in_b = vb.contains(&v);
    if !in_a {
        return gcd(a, &content_in(b, v));
    }
    if !in_b {
        return gcd(&content_in(a, v), b);
    }
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let c = gcd(&ca, &cb);
    let mut p = exact_div(a, &ca).expect("content divides");
    let mut q = exact_div(b, &cb).expect("content divides");
    if p.degree_in(v) < q.degree_in(v) {
        std::mem::swap(&mut p, &mut q);
    }
    if coprime_image(&p, &q, v) {
        return c.monic();
    }
    while !q.is_zero() {
        let r = prem(&p, &q, v);
        p = q;
        if r.is_zero() || r.degree_in(v) == 0 {
            q = r;
            if !q.is_zero() {
                // a nonzero remainder free of v: the primitive gcd is trivial
                return c.monic();
            }
            break;
        }
        let cr = content_in(&r, v);
        q = primitive_q(&exact_div(&r, &cr).expect("content divides"));
    }
    let cp = content_in(&p, v);
    let p = exact_div(&p, &cp).expect("content divides");
    (&c * &p).monic()
}
