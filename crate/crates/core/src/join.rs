//! Joins of ideals, symbolic powers and the constant-coefficient operators
//! attached to a primary ideal at the origin.

use crate::error::{Error, Result};
use crate::field::{Field, Rationals};
use crate::groebner::{eliminate, GroebnerBasis, Ideal};
use crate::inverse::dual_basis;
use crate::poly::{monomials_of_degree, MonomialOrder, PolyRing, Polynomial, Ring};
use crate::weyl::{z_name, DiffOp};

type QPoly = Polynomial<Rationals>;

/// `J ⋆ K`: all `f(v + w)` with `f` vanishing on pairs `(v, w)` in
/// `V(J) × V(K)`. Computed as `(J(v) + K(x - v)) ∩ Q[x]`.
pub fn join(j: &Ideal<Rationals>, k: &Ideal<Rationals>) -> Result<Ideal<Rationals>> {
    let ring = j.ring();
    if !ring.compatible(k.ring()) {
        return Err(Error::MismatchedRings);
    }
    let n = ring.nvars();
    let mut names: Vec<String> = ring.names().iter().map(|x| format!("_v_{x}")).collect();
    names.extend(ring.names().iter().cloned());
    let big = PolyRing::new(Rationals, names, MonomialOrder::Elimination(n));
    let v_map: Vec<Option<usize>> = (0..n).map(Some).collect();
    let w_images: Vec<Option<QPoly>> = (0..n)
        .map(|i| Some(&crate::poly::var(&big, n + i) - &crate::poly::var(&big, i)))
        .collect();
    let mut gens: Vec<QPoly> = Vec::new();
    for g in j.gens() {
        gens.push(g.rename(&big, &v_map)?);
    }
    for g in k.gens() {
        gens.push(g.substitute(&big, &w_images)?);
    }
    let both = Ideal::new(&big, gens)?;
    let drop: Vec<usize> = (0..n).collect();
    let e = eliminate(&both, &drop)?;
    let back: Vec<Option<usize>> = (0..2 * n).map(|i| i.checked_sub(n)).collect();
    let gens = e
        .gens()
        .iter()
        .map(|g| g.rename(ring, &back))
        .collect::<Result<Vec<_>>>()?;
    Ok(Ideal::new(ring, gens)?.groebner().into_ideal())
}

/// `⟨x_1, …, x_n⟩^r`.
pub fn maximal_power(ring: &Ring<Rationals>, r: u32) -> Ideal<Rationals> {
    let gens = monomials_of_degree(ring.nvars(), r)
        .into_iter()
        .map(|m| crate::poly::monomial(ring, m, Rationals.one()));
    Ideal::new(ring, gens).expect("same ring")
}

/// `J^(r) = J ⋆ m^r`; for a prime `J` over a perfect field this is the
/// `r`-th symbolic power.
pub fn symbolic_power(j: &Ideal<Rationals>, r: u32) -> Result<Ideal<Rationals>> {
    if r < 1 {
        return Err(Error::InvalidArgument("symbolic power needs r >= 1".into()));
    }
    join(j, &maximal_power(j.ring(), r))
}

/// The operators `𝔄(M)` of an ideal `M` primary to the maximal ideal at the
/// origin: its inverse system with `z^α` read as `∂x^α`.
#[derive(Clone, Debug)]
pub struct ConstantOperatorSpace {
    x_ring: Ring<Rationals>,
    z_ring: Ring<Rationals>,
    basis: Vec<QPoly>,
}

impl ConstantOperatorSpace {
    pub fn x_ring(&self) -> &Ring<Rationals> {
        &self.x_ring
    }

    pub fn z_ring(&self) -> &Ring<Rationals> {
        &self.z_ring
    }

    /// Basis as polynomials in `z`, in reduced echelon form.
    pub fn basis(&self) -> &[QPoly] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn operators(&self) -> Vec<DiffOp> {
        self.basis
            .iter()
            .map(|b| {
                let terms = b
                    .terms()
                    .iter()
                    .map(|(m, c)| (m.clone(), crate::poly::constant(&self.x_ring, c.clone())))
                    .collect();
                DiffOp::from_terms(&self.x_ring, terms)
            })
            .collect()
    }
}

/// `𝔄(M)` for an ideal `M` whose only zero is the origin.
pub fn diff_ops_assoc(m: &Ideal<Rationals>) -> Result<ConstantOperatorSpace> {
    let ring = m.ring();
    let gb = m.groebner();
    let len = gb.colength()?;
    let at_origin = monomials_of_degree(ring.nvars(), len as u32)
        .into_iter()
        .all(|mono| gb.contains(&crate::poly::monomial(ring, mono, Rationals.one())));
    if !at_origin {
        return Err(Error::InvalidArgument("the ideal is not primary to the origin".into()));
    }
    let z_ring = PolyRing::new(
        Rationals,
        ring.names().iter().map(|x| z_name(x)).collect(),
        MonomialOrder::GrevLex,
    );
    let v = dual_basis(&gb, &z_ring)?;
    Ok(ConstantOperatorSpace {
        x_ring: ring.clone(),
        z_ring,
        basis: v.basis().to_vec(),
    })
}

/// `f ∈ J ⋆ M`, decided by applying the operators of `M` to `f`.
pub fn join_membership(f: &QPoly, j: &Ideal<Rationals>, m: &Ideal<Rationals>) -> Result<bool> {
    let ops = diff_ops_assoc(m)?;
    let gb = j.groebner();
    Ok(ops.operators().iter().all(|a| gb.contains(&a.apply(f))))
}

/// Zariski–Nagata: every partial derivative of `f` of order below `r` lies
/// in `J`.
pub fn zn_membership(f: &QPoly, j: &Ideal<Rationals>, r: u32) -> bool {
    zn_membership_gb(f, &j.groebner(), r)
}

pub fn zn_membership_gb(f: &QPoly, gb: &GroebnerBasis<Rationals>, r: u32) -> bool {
    let n = f.ring().nvars();
    (0..r).all(|d| {
        monomials_of_degree(n, d)
            .into_iter()
            .all(|a| gb.contains(&f.derivative(a.exps())))
    })
}
