use super::GroebnerBasis;
use crate::field::{Field, RowEchelon};
use crate::poly::{monomials_of_degree, Monomial, Polynomial, Ring};
use std::collections::HashMap;

/// Reduced Gröbner basis of `⟨gens⟩ + ⟨x_1, …, x_n⟩^n`.
///
/// Modulo the power of the maximal ideal the ideal is a finite-dimensional
/// subspace of the polynomials of degree `< n`, closed under multiplication
/// by each variable. Its reduced echelon form, with columns in decreasing
/// term order, already is the reduced basis: the pivot rows with minimal
/// leading monomials plus the degree-`n` monomials outside their span.
pub fn truncated_groebner<F: Field>(ring: &Ring<F>, gens: &[Polynomial<F>], n: u32) -> GroebnerBasis<F> {
    let nv = ring.nvars();
    let mut cols: Vec<Monomial> = (0..n).flat_map(|d| monomials_of_degree(nv, d)).collect();
    cols.sort_by(|a, b| ring.cmp(b, a));
    let index: HashMap<Monomial, usize> = cols.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let field = ring.field().clone();
    let to_row = |p: &Polynomial<F>| -> Vec<F::Elem> {
        let mut v = vec![field.zero(); cols.len()];
        for (m, c) in p.terms() {
            if let Some(&i) = index.get(m) {
                v[i] = c.clone();
            }
        }
        v
    };
    let mut ech = RowEchelon::new(field.clone(), cols.len());
    let mut queue: Vec<Polynomial<F>> = gens.to_vec();
    while let Some(p) = queue.pop() {
        let v = to_row(&p);
        let r = ech.reduce(&v);
        if r.iter().all(|x| field.is_zero(x)) {
            continue;
        }
        let q = from_row(ring, &r, &cols);
        ech.insert(&r);
        for i in 0..nv {
            queue.push(&q * &crate::poly::var(ring, i));
        }
    }
    let rows: Vec<Polynomial<F>> = ech.rows().map(|r| from_row(ring, r, &cols)).collect();
    let lms: Vec<Monomial> = rows.iter().map(|p| p.lm().clone()).collect();
    let mut elems: Vec<Polynomial<F>> = rows
        .into_iter()
        .filter(|p| !lms.iter().any(|m| m != p.lm() && m.divides(p.lm())))
        .collect();
    for m in monomials_of_degree(nv, n) {
        if !lms.iter().any(|l| l.divides(&m)) {
            elems.push(crate::poly::monomial(ring, m, field.one()));
        }
    }
    elems.sort_by(|a, b| ring.cmp(b.lm(), a.lm()));
    GroebnerBasis::from_reduced(ring, elems)
}

fn from_row<F: Field>(ring: &Ring<F>, v: &[F::Elem], cols: &[Monomial]) -> Polynomial<F> {
    let terms = cols.iter().cloned().zip(v.iter().cloned()).collect();
    Polynomial::from_terms(ring, terms)
}
