use crate::error::{Error, Result};
use crate::field::{Field, Rationals, ResidueElement, ResidueField};
use crate::groebner::{independent_set, GroebnerBasis, Ideal};
use crate::poly::{MonomialOrder, PolyRing, Polynomial, Ring};
use crate::weyl::{z_name, DiffOp, WeylNoether};

type QPoly = Polynomial<Rationals>;

/// Everything derived from a prime `P` that the conversions need: its
/// Gröbner basis, a certified maximal independent set, and the residue
/// field `F = Frac(R/P)` with its `y`/`z` polynomial rings.
///
/// Variables keep their original indices in every name (`u3`, `y2`, `z2`);
/// internally the `u` ring lists the dependent variables first.
pub struct Scene {
    x_ring: Ring<Rationals>,
    prime: Ideal<Rationals>,
    prime_gb: GroebnerBasis<Rationals>,
    dep: Vec<usize>,
    indep: Vec<usize>,
    /// `x_to_u[i]` = position of `u_i` in the `u` ring.
    x_to_u: Vec<Option<usize>>,
    field: ResidueField,
    y_ring: Ring<ResidueField>,
    z_ring: Ring<ResidueField>,
}

fn rename_prefix(x: &str, prefix: char) -> String {
    match x.strip_prefix('x') {
        Some(rest) => format!("{prefix}{rest}"),
        None => format!("{prefix}_{x}"),
    }
}

impl Scene {
    pub fn new(prime: &Ideal<Rationals>) -> Result<Scene> {
        let x_ring = prime.ring().clone();
        let n = x_ring.nvars();
        let indep = independent_set(prime)?;
        let dep: Vec<usize> = (0..n).filter(|i| !indep.contains(i)).collect();
        let c = dep.len();
        let perm: Vec<usize> = dep.iter().chain(&indep).copied().collect();
        let mut x_to_u = vec![None; n];
        for (k, &i) in perm.iter().enumerate() {
            x_to_u[i] = Some(k);
        }
        let u_names = perm.iter().map(|&i| rename_prefix(&x_ring.names()[i], 'u')).collect();
        let u_ring = PolyRing::new(Rationals, u_names, MonomialOrder::GrevLex);
        let p_u: Vec<QPoly> = prime
            .gens()
            .iter()
            .map(|g| g.rename(&u_ring, &x_to_u))
            .collect::<Result<_>>()?;
        let field = ResidueField::new(&u_ring, c, &p_u)?;
        let y_names = dep.iter().map(|&i| rename_prefix(&x_ring.names()[i], 'y')).collect();
        let z_names = dep.iter().map(|&i| z_name(&x_ring.names()[i])).collect();
        let y_ring = PolyRing::new(field.clone(), y_names, MonomialOrder::GrevLex);
        let z_ring = PolyRing::new(field.clone(), z_names, MonomialOrder::GrevLex);
        let prime_gb = prime.groebner_in(MonomialOrder::GrevLex);
        Ok(Scene {
            x_ring,
            prime: prime.clone(),
            prime_gb,
            dep,
            indep,
            x_to_u,
            field,
            y_ring,
            z_ring,
        })
    }

    pub fn x_ring(&self) -> &Ring<Rationals> {
        &self.x_ring
    }

    pub fn prime(&self) -> &Ideal<Rationals> {
        &self.prime
    }

    pub fn prime_gb(&self) -> &GroebnerBasis<Rationals> {
        &self.prime_gb
    }

    pub fn codim(&self) -> usize {
        self.dep.len()
    }

    pub fn dependent(&self) -> &[usize] {
        &self.dep
    }

    pub fn independent(&self) -> &[usize] {
        &self.indep
    }

    pub fn field(&self) -> &ResidueField {
        &self.field
    }

    pub fn u_ring(&self) -> &Ring<Rationals> {
        self.field.u_ring()
    }

    pub fn y_ring(&self) -> &Ring<ResidueField> {
        &self.y_ring
    }

    pub fn z_ring(&self) -> &Ring<ResidueField> {
        &self.z_ring
    }

    pub fn x_to_u(&self) -> &[Option<usize>] {
        &self.x_to_u
    }

    /// Inverse of [`Scene::x_to_u`].
    pub fn u_to_x(&self) -> Vec<Option<usize>> {
        let mut back = vec![None; self.x_ring.nvars()];
        for (i, k) in self.x_to_u.iter().enumerate() {
            back[k.expect("total")] = Some(i);
        }
        back
    }

    /// Residue class in `F` of a polynomial in `x`.
    pub fn residue(&self, f: &QPoly) -> ResidueElement {
        let u = f.rename(self.u_ring(), &self.x_to_u).expect("total map");
        self.field.from_u_poly(&u)
    }

    /// A polynomial in `u` read back as a polynomial in `x`.
    pub fn u_to_x_poly(&self, f: &QPoly) -> QPoly {
        f.rename(&self.x_ring, &self.u_to_x()).expect("total map")
    }

    pub fn in_prime(&self, f: &QPoly) -> bool {
        self.prime_gb.contains(f)
    }

    /// Fails if `op` differentiates an independent variable.
    pub fn check_relative(&self, op: &DiffOp) -> Result<()> {
        for i in op.differentiated_vars() {
            if !self.dep.contains(&i) {
                return Err(Error::IndependentDerivative(self.x_ring.names()[i].clone()));
            }
        }
        Ok(())
    }

    pub fn weyl_noether(&self, op: &DiffOp) -> WeylNoether {
        op.reduce_to_weyl_noether(&self.field, &self.x_to_u)
    }

    /// `x^β ↦ z^β` for `β` supported on the dependent variables.
    pub fn dep_index(&self, i: usize) -> Option<usize> {
        self.dep.iter().position(|&d| d == i)
    }

    pub fn field_elem_text(&self, e: &ResidueElement) -> String {
        self.field.format(e)
    }
}

impl std::fmt::Debug for Scene {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Scene {{ P = {:?}, dependent = {:?}, independent = {:?} }}",
            self.prime, self.dep, self.indep
        )
    }
}
