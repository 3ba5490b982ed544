use super::forward::{gamma_image, lcm, lift_coefficients};
use super::Scene;
use crate::error::{Error, Result};
use crate::field::{Rationals, ResidueField};
use crate::groebner::{saturate, GroebnerBasis, Ideal};
use crate::inverse::{annihilator, DualSpace};
use crate::poly::{Monomial, MonomialOrder, PolyRing, Polynomial};
use crate::weyl::{span_is_bimodule, DiffOp};

type QPoly = Polynomial<Rationals>;

/// Do the operators describe a `P`-primary ideal? True iff the `F`-span of
/// their Weyl–Noether images is stable under right multiplication by every
/// variable.
pub fn verify_noetherian(ops: &[DiffOp], scene: &Scene) -> Result<bool> {
    for a in ops {
        scene.check_relative(a)?;
    }
    Ok(span_is_bimodule(ops, scene.field(), scene.x_to_u()))
}

/// The Weyl–Noether image of an operator as a polynomial in `z` over `F`.
fn to_dual_element(op: &DiffOp, scene: &Scene) -> Polynomial<ResidueField> {
    let c = scene.codim();
    let wn = scene.weyl_noether(op);
    let terms = wn
        .terms()
        .iter()
        .map(|(b, e)| {
            let mut m = Monomial::one(c);
            for (k, &i) in scene.dependent().iter().enumerate() {
                m.set_exp(k, b.exp(i));
            }
            (m, e.clone())
        })
        .collect();
    Polynomial::from_terms(scene.z_ring(), terms)
}

/// Inverse system spanned by the operators, closed under differentiation.
pub fn operators_to_inverse_system(ops: &[DiffOp], scene: &Scene) -> DualSpace<ResidueField> {
    let polys: Vec<_> = ops.iter().map(|a| to_dual_element(a, scene)).collect();
    DualSpace::closure_of(scene.z_ring(), &polys)
}

/// Details of a reconstruction, for reporting.
#[derive(Clone, Debug)]
pub struct Reconstruction {
    pub ideal: Ideal<Rationals>,
    pub multiplicity: usize,
    /// `h · Π lc`, the element of `K[U]` the intermediate ideal was saturated by.
    pub witness: QPoly,
}

/// The `P`-primary ideal `{f : A • f ∈ P for all A}` of a set of Noetherian
/// operators, as a reduced grevlex Gröbner basis.
pub fn ideal_from_operators(ops: &[DiffOp], scene: &Scene, max_degree: usize) -> Result<Ideal<Rationals>> {
    Ok(reconstruct(ops, scene, max_degree)?.ideal)
}

pub fn reconstruct(ops: &[DiffOp], scene: &Scene, max_degree: usize) -> Result<Reconstruction> {
    if ops.is_empty() {
        return Err(Error::InvalidArgument("no operators given".into()));
    }
    if !verify_noetherian(ops, scene)? {
        return Err(Error::BimoduleCheckFailed);
    }
    let x_ring = scene.x_ring();
    let n = x_ring.nvars();
    let c = scene.codim();
    let dep = scene.dependent();

    let v = operators_to_inverse_system(ops, scene);
    let dim_v = v.dim();
    let i_gb = annihilator(&v, scene.y_ring())?;

    // Ring T = Q[u_dep | x_1..x_n] with the dependent u's eliminated first.
    let mut names: Vec<String> = scene.u_ring().names()[..c].to_vec();
    names.extend(x_ring.names().iter().cloned());
    let t_ring = PolyRing::new(Rationals, names, MonomialOrder::Elimination(c));
    // u ring position k → T variable: dependent u's stay, independent ones become x.
    let u_to_x = scene.u_to_x();
    let u_to_t: Vec<Option<usize>> = (0..n)
        .map(|k| if k < c { Some(k) } else { Some(c + u_to_x[k].expect("total")) })
        .collect();
    // y_k ↦ x_{dep k} - u_k
    let y_images: Vec<QPoly> = dep
        .iter()
        .enumerate()
        .map(|(k, &i)| &crate::poly::var(&t_ring, c + i) - &crate::poly::var(&t_ring, k))
        .collect();

    let mut h = crate::poly::one(scene.u_ring());
    let mut gens: Vec<QPoly> = Vec::new();
    for g in i_gb.elems() {
        let (terms, w) = lift_coefficients(scene.field(), g);
        if !w.is_one() {
            h = lcm(&h, &w);
        }
        let mut acc = crate::poly::zero(&t_ring);
        for (ym, a) in terms {
            let mut t = a.rename(&t_ring, &u_to_t)?;
            for k in ym.support().collect::<Vec<_>>() {
                t = &t * &y_images[k].pow(ym.exp(k) as u32);
            }
            acc = &acc + &t;
        }
        gens.push(acc);
    }
    // P(u_dep, x_indep)
    let x_to_t: Vec<Option<usize>> = (0..n)
        .map(|i| match scene.dep_index(i) {
            Some(k) => Some(k),
            None => Some(c + i),
        })
        .collect();
    for p in scene.prime().gens() {
        gens.push(p.rename(&t_ring, &x_to_t)?);
    }
    let t_gb = GroebnerBasis::compute(&t_ring, &gens);
    let t_to_x: Vec<Option<usize>> = (0..c + n).map(|j| if j < c { None } else { Some(j - c) }).collect();
    let q_prime: Vec<QPoly> = t_gb
        .elems()
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| m.exps()[..c].iter().all(|&e| e == 0)))
        .map(|g| g.rename(x_ring, &t_to_x))
        .collect::<Result<_>>()?;
    let q_prime = Ideal::new(x_ring, q_prime)?;

    // Saturation witness: h times the leading coefficients of a basis of Q'
    // in K(U)[x_dep].
    let mut witness = scene.u_to_x_poly(&h);
    for lc in dependent_leading_coefficients(&q_prime, scene) {
        if lc.is_constant() {
            continue;
        }
        let g = crate::poly::gcd(&witness, &lc);
        let extra = crate::poly::exact_div(&lc, &g).expect("gcd divides");
        if !extra.is_constant() {
            witness = &witness * &extra;
        }
    }
    let q = if witness.is_constant() {
        q_prime
    } else {
        saturate(&q_prime, &witness)?
    };
    let q = q.groebner_in(MonomialOrder::GrevLex).into_ideal();

    // Post-verification.
    for g in q.gens() {
        for a in ops {
            if !scene.in_prime(&a.apply(g)) {
                return Err(Error::PostVerificationFailed(format!(
                    "operator {a} maps generator {g} outside the prime"
                )));
            }
        }
    }
    let m = gamma_image(&q, scene, max_degree)?.multiplicity;
    if m != dim_v {
        return Err(Error::PostVerificationFailed(format!(
            "multiplicity {m} differs from the dimension {dim_v} of the inverse system"
        )));
    }
    Ok(Reconstruction {
        ideal: q,
        multiplicity: m,
        witness,
    })
}

/// Leading coefficients, as polynomials in the independent variables, of a
/// Gröbner basis of `I` for a block order with the dependent variables first.
fn dependent_leading_coefficients(ideal: &Ideal<Rationals>, scene: &Scene) -> Vec<QPoly> {
    let x_ring = scene.x_ring();
    let n = x_ring.nvars();
    let c = scene.codim();
    let perm: Vec<usize> = scene.dependent().iter().chain(scene.independent()).copied().collect();
    let names = perm.iter().map(|&i| x_ring.names()[i].clone()).collect();
    let b_ring = PolyRing::new(Rationals, names, MonomialOrder::Elimination(c));
    let mut fwd = vec![None; n];
    let mut back = vec![None; n];
    for (k, &i) in perm.iter().enumerate() {
        fwd[i] = Some(k);
        back[k] = Some(i);
    }
    let gens: Vec<QPoly> = ideal.gens().iter().map(|g| g.rename(&b_ring, &fwd).expect("total")).collect();
    let gb = GroebnerBasis::compute(&b_ring, &gens);
    let mut out: Vec<QPoly> = Vec::new();
    for g in gb.elems() {
        let lead_dep = &g.lm().exps()[..c];
        let terms: Vec<_> = g
            .terms()
            .iter()
            .filter(|(m, _)| &m.exps()[..c] == lead_dep)
            .map(|(m, q)| {
                let mut m = m.clone();
                for k in 0..c {
                    m.set_exp(k, 0);
                }
                (m, q.clone())
            })
            .collect();
        let lc = Polynomial::from_terms(&b_ring, terms).rename(x_ring, &back).expect("total");
        if !out.contains(&lc) {
            out.push(lc);
        }
    }
    out
}
