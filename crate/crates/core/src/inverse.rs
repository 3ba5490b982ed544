//! Macaulay inverse systems of zero-dimensional ideals.
//!
//! A polynomial `f(y)` acts on `F(z)` by `y_i ↦ ∂/∂z_i`; the inverse system
//! of an ideal `I` is the space of all `F` killed by every element of `I`.
//! Monomials act as plain iterated derivatives, without factorial scaling.

use crate::error::{Error, Result};
use crate::field::{solve_nullspace, Field, RowEchelon};
use crate::groebner::{GroebnerBasis, Ideal};
use crate::poly::{monomials_of_degree, Monomial, Polynomial, Ring};

/// `f • G`: `f(∂z_1, …, ∂z_c)` applied to `G`. Both rings have `c` variables.
pub fn contract<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>) -> Polynomial<F> {
    let mut out = crate::poly::zero(g.ring());
    for (b, c) in f.terms() {
        let d = g.derivative(b.exps());
        if !d.is_zero() {
            out = &out + &d.scale(c);
        }
    }
    out
}

/// `α!` as a field element.
fn factorial_weight<F: Field>(field: &F, m: &Monomial) -> F::Elem {
    let mut w: i64 = 1;
    for &e in m.exps() {
        for k in 2..=e as i64 {
            w *= k;
        }
    }
    field.from_int(w)
}

/// Monomials of total degree at most `d`, increasing in the ring's order.
fn monomials_up_to<F: Field>(ring: &Ring<F>, d: u32) -> Vec<Monomial> {
    let mut ms: Vec<Monomial> = (0..=d).flat_map(|k| monomials_of_degree(ring.nvars(), k)).collect();
    ms.sort_by(|a, b| ring.cmp(a, b));
    ms
}

/// A finite-dimensional space of polynomials in `z`, closed under every
/// `∂/∂z_i`, stored in reduced echelon form: each basis element has leading
/// coefficient 1 and its leading monomial appears in no other element.
/// Elements are sorted by increasing leading monomial.
#[derive(Clone, Debug)]
pub struct DualSpace<F: Field> {
    ring: Ring<F>,
    basis: Vec<Polynomial<F>>,
}

impl<F: Field> DualSpace<F> {
    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn basis(&self) -> &[Polynomial<F>] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn max_degree(&self) -> u32 {
        self.basis.iter().filter_map(|b| b.total_degree()).max().unwrap_or(0)
    }

    /// Canonical echelon basis of the span of `polys`, without closing it.
    pub fn span_of(ring: &Ring<F>, polys: &[Polynomial<F>]) -> Self {
        let d = polys.iter().filter_map(|p| p.total_degree()).max().unwrap_or(0);
        let mut cols = monomials_up_to(ring, d);
        cols.reverse();
        let mut ech = RowEchelon::new(ring.field().clone(), cols.len());
        for p in polys {
            ech.insert(&to_coords(p, &cols));
        }
        let mut basis: Vec<Polynomial<F>> = ech.rows().map(|r| from_coords(ring, r, &cols)).collect();
        basis.reverse();
        DualSpace {
            ring: ring.clone(),
            basis,
        }
    }

    /// Smallest differentiation-closed space containing `polys`.
    pub fn closure_of(ring: &Ring<F>, polys: &[Polynomial<F>]) -> Self {
        let d = polys.iter().filter_map(|p| p.total_degree()).max().unwrap_or(0);
        let mut cols = monomials_up_to(ring, d);
        cols.reverse();
        let mut ech = RowEchelon::new(ring.field().clone(), cols.len());
        let mut queue: Vec<Polynomial<F>> = polys.to_vec();
        while let Some(p) = queue.pop() {
            if p.is_zero() || !ech.insert(&to_coords(&p, &cols)) {
                continue;
            }
            for i in 0..ring.nvars() {
                queue.push(p.partial_derivative(i));
            }
        }
        let mut basis: Vec<Polynomial<F>> = ech.rows().map(|r| from_coords(ring, r, &cols)).collect();
        basis.reverse();
        DualSpace {
            ring: ring.clone(),
            basis,
        }
    }

    pub fn is_closed(&self) -> bool {
        let d = self.max_degree();
        let cols = monomials_up_to(&self.ring, d);
        let mut ech = RowEchelon::new(self.ring.field().clone(), cols.len());
        for b in &self.basis {
            ech.insert(&to_coords(b, &cols));
        }
        self.basis.iter().all(|b| {
            (0..self.ring.nvars()).all(|i| ech.contains(&to_coords(&b.partial_derivative(i), &cols)))
        })
    }

    pub fn contains(&self, p: &Polynomial<F>) -> bool {
        let d = self.max_degree().max(p.total_degree().unwrap_or(0));
        let cols = monomials_up_to(&self.ring, d);
        let mut ech = RowEchelon::new(self.ring.field().clone(), cols.len());
        for b in &self.basis {
            ech.insert(&to_coords(b, &cols));
        }
        ech.contains(&to_coords(p, &cols))
    }

    /// Same span (the canonical bases coincide).
    pub fn same_span(&self, other: &DualSpace<F>) -> bool {
        self.basis == DualSpace::span_of(&self.ring, &other.basis).basis
    }
}

fn to_coords<F: Field>(p: &Polynomial<F>, cols: &[Monomial]) -> Vec<F::Elem> {
    cols.iter().map(|m| p.coeff(m)).collect()
}

fn from_coords<F: Field>(ring: &Ring<F>, v: &[F::Elem], cols: &[Monomial]) -> Polynomial<F> {
    let terms = cols.iter().cloned().zip(v.iter().cloned()).collect();
    Polynomial::from_terms(ring, terms)
}

/// Inverse system `I^⊥` of a zero-dimensional ideal given by a Gröbner
/// basis in the `y` variables; the result lives in `z_ring` (same number of
/// variables, same field).
///
/// The space of solutions of degree `≤ d` is computed for `d = 0, 1, …`
/// until it stops growing; its dimension must then equal the colength.
pub fn dual_basis<F: Field>(gb: &GroebnerBasis<F>, z_ring: &Ring<F>) -> Result<DualSpace<F>> {
    let m = gb.colength()?;
    let field = z_ring.field().clone();
    let mut prev: Option<Vec<Polynomial<F>>> = None;
    for d in 0..=m as u32 {
        let cols = monomials_up_to(z_ring, d);
        // rows: (generator, result monomial) pairs
        let mut row_index: std::collections::HashMap<(usize, Monomial), usize> = Default::default();
        let mut rows: Vec<Vec<F::Elem>> = Vec::new();
        for (gi, g) in gb.elems().iter().enumerate() {
            for (j, a) in cols.iter().enumerate() {
                for (b, c) in g.terms() {
                    let Some(rest) = a.div(b) else { continue };
                    // ∂^b z^a = a!/(a-b)! z^(a-b)
                    let mut k: i64 = 1;
                    for (&ae, &be) in a.exps().iter().zip(b.exps()) {
                        for t in 0..be {
                            k *= (ae - t) as i64;
                        }
                    }
                    let r = *row_index.entry((gi, rest)).or_insert_with(|| {
                        rows.push(vec![field.zero(); cols.len()]);
                        rows.len() - 1
                    });
                    rows[r][j] = field.add(&rows[r][j], &field.mul(c, &field.from_int(k)));
                }
            }
        }
        let ns = solve_nullspace(&field, &rows, cols.len());
        let basis: Vec<Polynomial<F>> = ns.iter().map(|v| from_coords(z_ring, v, &cols)).collect();
        if let Some(p) = &prev {
            if p.len() == basis.len() {
                if p.len() != m {
                    return Err(Error::NotZeroDimensional);
                }
                return Ok(DualSpace {
                    ring: z_ring.clone(),
                    basis: p.clone(),
                });
            }
        }
        prev = Some(basis);
    }
    // the solution space is bounded by degree m - 1, so this is only reached
    // when the last step still grew
    match prev {
        Some(p) if p.len() == m => Ok(DualSpace {
            ring: z_ring.clone(),
            basis: p,
        }),
        _ => Err(Error::NotZeroDimensional),
    }
}

/// `Ann(V)`: all `f(y)` with `f • B = 0` for every `B ∈ V`, returned as a
/// reduced Gröbner basis in `y_ring` (grevlex or whatever its order is).
pub fn annihilator<F: Field>(v: &DualSpace<F>, y_ring: &Ring<F>) -> Result<GroebnerBasis<F>> {
    if !v.is_closed() {
        return Err(Error::NotClosedUnderDifferentiation);
    }
    let field = y_ring.field().clone();
    let d = v.max_degree() + 1;
    let cols = monomials_up_to(y_ring, d);
    // Closure under ∂ makes `f • B = 0 ∀B` equivalent to the vanishing of
    // the constant terms `(f • B)(0) = Σ β! f_β B_β`.
    let rows: Vec<Vec<F::Elem>> = v
        .basis()
        .iter()
        .map(|b| {
            cols.iter()
                .map(|m| {
                    let c = b.coeff(m);
                    if field.is_zero(&c) {
                        c
                    } else {
                        field.mul(&c, &factorial_weight(&field, m))
                    }
                })
                .collect()
        })
        .collect();
    let ns = solve_nullspace(&field, &rows, cols.len());
    let gens: Vec<Polynomial<F>> = ns.iter().map(|x| from_coords(y_ring, x, &cols)).collect();
    Ok(GroebnerBasis::compute(y_ring, &gens))
}

/// The point `⟨y1^m, y2 + a_1 y1 + … + a_{m-1} y1^{m-1}⟩` of the punctual
/// Hilbert scheme of the plane.
pub fn briancon_point<F: Field>(y_ring: &Ring<F>, m: u32, a: &[F::Elem]) -> Result<Ideal<F>> {
    if y_ring.nvars() != 2 {
        return Err(Error::InvalidArgument("Briançon points need two variables".into()));
    }
    if m == 0 || a.len() + 1 != m as usize {
        return Err(Error::InvalidArgument("need m >= 1 and m - 1 coefficients".into()));
    }
    let y1 = crate::poly::var(y_ring, 0);
    let mut g = crate::poly::var(y_ring, 1);
    for (k, c) in a.iter().enumerate() {
        g = &g + &y1.pow(k as u32 + 1).scale(c);
    }
    Ideal::new(y_ring, [y1.pow(m), g])
}
