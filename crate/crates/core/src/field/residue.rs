//! The residue function field `F = Frac(R/P)` of a prime `P`.
//!
//! With `u_1..u_c` dependent and `u_{c+1}..u_n` independent modulo `P`, the
//! extension `P·K(U)[u_1..u_c]` is a maximal ideal and `F` is the finite
//! `K(U)`-algebra `K(U)[u_1..u_c]/P`. Elements are stored as coordinate
//! vectors over the standard monomials of a reduced basis of that ideal, a
//! canonical form, so equality of elements is structural.

use super::{Field, LinearSystem, RatFunc, Rational, RationalFunctions, Rationals};
use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::poly::{exact_div, gcd, Monomial, MonomialOrder, PolyRing, Polynomial, Ring};
use std::fmt;
use std::sync::Arc;

type QPoly = Polynomial<Rationals>;

#[derive(Clone, PartialEq)]
pub struct ResidueElement {
    coords: Vec<RatFunc>,
}

impl ResidueElement {
    pub fn coords(&self) -> &[RatFunc] {
        &self.coords
    }
}

impl fmt::Debug for ResidueElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords)
    }
}

struct Context {
    u_ring: Ring<Rationals>,
    c: usize,
    kf: RationalFunctions,
    dep_ring: Ring<RationalFunctions>,
    gb: GroebnerBasis<RationalFunctions>,
    basis: Vec<Monomial>,
    /// `table[i][j]` = coordinates of `basis[i] * basis[j]`.
    table: Vec<Vec<Vec<RatFunc>>>,
}

/// `Frac(Q[u]/P)` for a prime `P`.
#[derive(Clone)]
pub struct ResidueField {
    ctx: Arc<Context>,
}

impl fmt::Debug for ResidueField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Frac(Q[{}]/P)", self.ctx.u_ring.names().join(","))
    }
}

impl ResidueField {
    /// `u_ring` lists the `c` dependent variables first. `p` generates the
    /// prime in `u_ring`; primality is trusted.
    pub fn new(u_ring: &Ring<Rationals>, c: usize, p: &[QPoly]) -> Result<Self> {
        let n = u_ring.nvars();
        if c > n {
            return Err(Error::InvalidArgument("codimension exceeds variable count".into()));
        }
        let indep = PolyRing::new(Rationals, u_ring.names()[c..].to_vec(), MonomialOrder::GrevLex);
        let kf = RationalFunctions::new(indep);
        let dep_ring = PolyRing::new(kf.clone(), u_ring.names()[..c].to_vec(), MonomialOrder::GrevLex);
        let gens: Vec<_> = p.iter().map(|g| to_dep(g, c, &kf, &dep_ring)).collect();
        let gb = GroebnerBasis::compute(&dep_ring, &gens);
        if gb.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let basis = gb.standard_monomials()?;
        let mut ctx = Context {
            u_ring: u_ring.clone(),
            c,
            kf,
            dep_ring,
            gb,
            basis,
            table: Vec::new(),
        };
        let d = ctx.basis.len();
        let mut table = vec![vec![Vec::new(); d]; d];
        for i in 0..d {
            for j in i..d {
                let m = ctx.basis[i].mul(&ctx.basis[j]);
                let p = crate::poly::monomial(&ctx.dep_ring, m, ctx.kf.one());
                let v = ctx.coords_of(&ctx.gb.normal_form(&p));
                table[i][j] = v.clone();
                table[j][i] = v;
            }
        }
        ctx.table = table;
        Ok(ResidueField { ctx: Arc::new(ctx) })
    }

    pub fn u_ring(&self) -> &Ring<Rationals> {
        &self.ctx.u_ring
    }

    pub fn codim(&self) -> usize {
        self.ctx.c
    }

    /// The subfield `K(U)` of rational functions in the independent variables.
    pub fn base(&self) -> &RationalFunctions {
        &self.ctx.kf
    }

    /// Degree of `F` over `K(U)`.
    pub fn degree(&self) -> usize {
        self.ctx.basis.len()
    }

    /// Standard monomials in the dependent variables, a `K(U)`-basis of `F`.
    pub fn basis(&self) -> &[Monomial] {
        &self.ctx.basis
    }

    /// Residue class of a polynomial in `u`.
    pub fn from_u_poly(&self, f: &QPoly) -> ResidueElement {
        let ctx = &self.ctx;
        let p = to_dep(f, ctx.c, &ctx.kf, &ctx.dep_ring);
        ResidueElement {
            coords: ctx.coords_of(&ctx.gb.normal_form(&p)),
        }
    }

    pub fn from_base(&self, r: &RatFunc) -> ResidueElement {
        let mut coords = vec![self.ctx.kf.zero(); self.degree()];
        coords[0] = r.clone();
        ResidueElement { coords }
    }

    /// `a/b` for polynomials in `u`; fails when `b ∈ P`.
    pub fn fraction(&self, a: &QPoly, b: &QPoly) -> Result<ResidueElement> {
        let b = self.from_u_poly(b);
        Ok(self.mul(&self.from_u_poly(a), &self.inv(&b)?))
    }

    /// `(a, w)` with `e = a/w`, `a` a polynomial in `u` in normal form and `w`
    /// a monic polynomial in the independent variables only (as an element of
    /// `u_ring`).
    pub fn lift(&self, e: &ResidueElement) -> (QPoly, QPoly) {
        let ctx = &self.ctx;
        let kring = ctx.kf.ring();
        let mut l = crate::poly::one(kring);
        for c in &e.coords {
            if !c.den().is_one() {
                let g = gcd(&l, c.den());
                l = &exact_div(&l, &g).expect("gcd divides") * c.den();
            }
        }
        let n = ctx.u_ring.nvars();
        let mut terms = Vec::new();
        for (c, b) in e.coords.iter().zip(&ctx.basis) {
            if c.num().is_zero() {
                continue;
            }
            let scaled = &c.num().clone() * &exact_div(&l, c.den()).expect("lcm");
            for (m, q) in scaled.terms() {
                let mut u = Monomial::one(n);
                for i in 0..ctx.c {
                    u.set_exp(i, b.exp(i));
                }
                for i in 0..n - ctx.c {
                    u.set_exp(ctx.c + i, m.exp(i));
                }
                terms.push((u, q.clone()));
            }
        }
        let a = Polynomial::from_terms(&ctx.u_ring, terms);
        (a, embed_indep(&l, ctx.c, &ctx.u_ring))
    }

    fn check_len(&self, a: &ResidueElement) {
        debug_assert_eq!(a.coords.len(), self.degree());
    }
}

/// Maps a polynomial in the independent variables into `u_ring`.
fn embed_indep(p: &QPoly, c: usize, u_ring: &Ring<Rationals>) -> QPoly {
    let n = u_ring.nvars();
    let terms = p
        .terms()
        .iter()
        .map(|(m, q)| {
            let mut u = Monomial::one(n);
            for i in 0..n - c {
                u.set_exp(c + i, m.exp(i));
            }
            (u, q.clone())
        })
        .collect();
    Polynomial::from_terms(u_ring, terms)
}

/// Views `f ∈ Q[u]` as a polynomial in the dependent variables over `K(U)`.
fn to_dep(f: &QPoly, c: usize, kf: &RationalFunctions, dep_ring: &Ring<RationalFunctions>) -> Polynomial<RationalFunctions> {
    let n = f.ring().nvars();
    let mut groups: std::collections::HashMap<Monomial, Vec<(Monomial, Rational)>> = Default::default();
    for (m, q) in f.terms() {
        let dep = Monomial::new(m.exps()[..c].iter().copied());
        let ind = Monomial::new(m.exps()[c..n].iter().copied());
        groups.entry(dep).or_default().push((ind, q.clone()));
    }
    let terms = groups
        .into_iter()
        .map(|(dep, t)| (dep, kf.from_poly(Polynomial::from_terms(kf.ring(), t))))
        .collect();
    Polynomial::from_terms(dep_ring, terms)
}

impl Context {
    fn coords_of(&self, nf: &Polynomial<RationalFunctions>) -> Vec<RatFunc> {
        self.basis.iter().map(|b| nf.coeff(b)).collect()
    }
}

impl Field for ResidueField {
    type Elem = ResidueElement;

    fn zero(&self) -> ResidueElement {
        ResidueElement {
            coords: vec![self.ctx.kf.zero(); self.degree()],
        }
    }

    fn one(&self) -> ResidueElement {
        self.from_base(&self.ctx.kf.one())
    }

    fn is_zero(&self, a: &ResidueElement) -> bool {
        a.coords.iter().all(|c| self.ctx.kf.is_zero(c))
    }

    fn add(&self, a: &ResidueElement, b: &ResidueElement) -> ResidueElement {
        let kf = &self.ctx.kf;
        ResidueElement {
            coords: a.coords.iter().zip(&b.coords).map(|(x, y)| kf.add(x, y)).collect(),
        }
    }

    fn neg(&self, a: &ResidueElement) -> ResidueElement {
        let kf = &self.ctx.kf;
        ResidueElement {
            coords: a.coords.iter().map(|x| kf.neg(x)).collect(),
        }
    }

    fn sub(&self, a: &ResidueElement, b: &ResidueElement) -> ResidueElement {
        let kf = &self.ctx.kf;
        ResidueElement {
            coords: a.coords.iter().zip(&b.coords).map(|(x, y)| kf.sub(x, y)).collect(),
        }
    }

    fn mul(&self, a: &ResidueElement, b: &ResidueElement) -> ResidueElement {
        self.check_len(a);
        self.check_len(b);
        let ctx = &self.ctx;
        let kf = &ctx.kf;
        let d = self.degree();
        if d == 1 {
            return ResidueElement {
                coords: vec![kf.mul(&a.coords[0], &b.coords[0])],
            };
        }
        let mut out = vec![kf.zero(); d];
        for (i, x) in a.coords.iter().enumerate() {
            if kf.is_zero(x) {
                continue;
            }
            for (j, y) in b.coords.iter().enumerate() {
                if kf.is_zero(y) {
                    continue;
                }
                let xy = kf.mul(x, y);
                for (k, t) in ctx.table[i][j].iter().enumerate() {
                    if !kf.is_zero(t) {
                        out[k] = kf.add(&out[k], &kf.mul(&xy, t));
                    }
                }
            }
        }
        ResidueElement { coords: out }
    }

    fn inv(&self, a: &ResidueElement) -> Result<ResidueElement> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        let kf = &self.ctx.kf;
        let d = self.degree();
        if d == 1 {
            return Ok(ResidueElement {
                coords: vec![kf.inv(&a.coords[0])?],
            });
        }
        // Solve (a * x) = 1 for the coordinates of x.
        let cols: Vec<Vec<RatFunc>> = (0..d)
            .map(|j| {
                let mut e = vec![kf.zero(); d];
                e[j] = kf.one();
                self.mul(a, &ResidueElement { coords: e }).coords
            })
            .collect();
        let mut sys = LinearSystem::new(kf.clone(), d);
        for i in 0..d {
            let row = (0..d).map(|j| cols[j][i].clone()).collect();
            sys.push(row, if i == 0 { kf.one() } else { kf.zero() });
        }
        let x = sys.solve().ok_or(Error::DivisionByZero)?;
        Ok(ResidueElement { coords: x })
    }

    fn from_rational(&self, q: &Rational) -> ResidueElement {
        self.from_base(&self.ctx.kf.from_rational(q))
    }

    fn as_rational(&self, a: &ResidueElement) -> Option<Rational> {
        let kf = &self.ctx.kf;
        if a.coords[1..].iter().any(|c| !kf.is_zero(c)) {
            return None;
        }
        kf.as_rational(&a.coords[0])
    }

    fn format(&self, a: &ResidueElement) -> String {
        let (num, den) = self.lift(a);
        if den.is_one() {
            num.to_string()
        } else if num.len() == 1 {
            format!("{num}/({den})")
        } else {
            format!("({num})/({den})")
        }
    }

    fn same_field(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ctx, &other.ctx)
    }

    fn weight(&self, a: &ResidueElement) -> usize {
        a.coords.iter().map(|c| self.ctx.kf.weight(c)).sum()
    }
}
