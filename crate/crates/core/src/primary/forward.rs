use super::Scene;
use crate::error::{Error, Result};
use crate::field::{Field, Rational, Rationals, ResidueElement, ResidueField};
use crate::groebner::{truncated_groebner, GroebnerBasis, Ideal};
use crate::inverse::{dual_basis, DualSpace};
use crate::poly::{exact_div, gcd, monomials_of_degree, Monomial, Polynomial, Ring};
use crate::weyl::{multiplier_ring, DiffOp};
use std::sync::Arc;

type QPoly = Polynomial<Rationals>;

/// Default cap on the truncation degree used while stabilizing `γ(Q)`.
pub const DEFAULT_MAX_DEGREE: usize = 40;

/// The zero-dimensional ideal `I = γ(Q) + ⟨y⟩^N` over `F`, for the first `N`
/// at which its colength stops changing.
#[derive(Clone, Debug)]
pub struct GammaImage {
    pub gb: GroebnerBasis<ResidueField>,
    pub multiplicity: usize,
    pub truncation: usize,
}

/// Taylor coefficients of `g` around `x_dep = u_dep`: the coefficient of
/// `y^β` is `(∂^β g / β!)(u)`, read in `F`.
fn taylor_layer(g: &QPoly, scene: &Scene, degree: u32) -> Vec<(Monomial, ResidueElement)> {
    let c = scene.codim();
    let n = scene.x_ring().nvars();
    let field = scene.field();
    let mut out = Vec::new();
    for beta in monomials_of_degree(c, degree) {
        let mut full = vec![0u16; n];
        let mut fact: i64 = 1;
        for (k, &i) in scene.dependent().iter().enumerate() {
            full[i] = beta.exp(k);
            for t in 2..=beta.exp(k) as i64 {
                fact *= t;
            }
        }
        let d = g.derivative(&full);
        if d.is_zero() {
            continue;
        }
        let d = d.scale(&Rational::new(1.into(), fact.into()));
        let e = scene.residue(&d);
        if !field.is_zero(&e) {
            out.push((beta, e));
        }
    }
    out
}

/// `γ(Q)`: substitute `x_i ↦ y_i + u_i` (dependent) and `x_j ↦ u_j`
/// (independent), read coefficients in `F`, and add `⟨y⟩^N` for growing `N`
/// until the colength is the same for two consecutive `N`.
pub fn gamma_image(q: &Ideal<Rationals>, scene: &Scene, max_degree: usize) -> Result<GammaImage> {
    let y_ring = scene.y_ring();
    let c = scene.codim();
    let gens: Vec<QPoly> = q.gens().to_vec();
    let mut layers: Vec<Vec<Vec<(Monomial, ResidueElement)>>> = vec![Vec::new(); gens.len()];
    let mut prev: Option<usize> = None;
    for n in 1..=max_degree.max(1) {
        let deg = (n - 1) as u32;
        for (g, layer) in gens.iter().zip(layers.iter_mut()) {
            if g.total_degree().unwrap_or(0) >= deg {
                layer.push(taylor_layer(g, scene, deg));
            } else {
                layer.push(Vec::new());
            }
        }
        if n == 1 && layers.iter().any(|l| !l[0].is_empty()) {
            return Err(Error::InvalidArgument("the ideal is not contained in the prime".into()));
        }
        let polys: Vec<Polynomial<ResidueField>> = layers
            .iter()
            .map(|l| Polynomial::from_terms(y_ring, l.iter().flatten().cloned().collect()))
            .collect();
        let gb = truncated_groebner(y_ring, &polys, n as u32);
        let m = gb.colength()?;
        if prev == Some(m) || c == 0 {
            return Ok(GammaImage {
                gb,
                multiplicity: m,
                truncation: n,
            });
        }
        prev = Some(m);
    }
    Err(Error::StabilizationFailed { cap: max_degree })
}

/// Result of converting a primary ideal to Noetherian operators.
#[derive(Clone, Debug)]
pub struct OperatorRepresentation {
    pub scene: Arc<Scene>,
    pub operators: Vec<DiffOp>,
    pub multiplicity: usize,
    pub gamma: GammaImage,
    pub inverse_system: DualSpace<ResidueField>,
}

impl OperatorRepresentation {
    /// Noetherian multipliers `B_l(x, z)`.
    pub fn multipliers(&self) -> Vec<QPoly> {
        let mr = multiplier_ring(self.scene.x_ring());
        self.operators.iter().map(|a| a.to_multiplier(&mr)).collect()
    }

    /// Highest derivative order among the operators.
    pub fn order(&self) -> u32 {
        self.operators.iter().map(|a| a.order()).max().unwrap_or(0)
    }
}

/// Least common multiple of polynomials (monic).
pub(crate) fn lcm(a: &QPoly, b: &QPoly) -> QPoly {
    let g = gcd(a, b);
    (&exact_div(a, &g).expect("gcd divides") * b).monic()
}

/// Clears the `F`-denominators of a polynomial `Σ e_α t^α` with
/// coefficients in `F`. Returns `(Σ a_α(u) t^α, W)` where `W ∈ K[U]` and the
/// input equals the result divided by `W`. `t`-monomials are returned as is.
pub(crate) fn lift_coefficients(
    field: &ResidueField,
    p: &Polynomial<ResidueField>,
) -> (Vec<(Monomial, QPoly)>, QPoly) {
    let lifts: Vec<(Monomial, QPoly, QPoly)> = p
        .terms()
        .iter()
        .map(|(m, e)| {
            let (a, w) = field.lift(e);
            (m.clone(), a, w)
        })
        .collect();
    let mut big_w = crate::poly::one(field.u_ring());
    for (_, _, w) in &lifts {
        if !w.is_one() {
            big_w = lcm(&big_w, w);
        }
    }
    let terms = lifts
        .into_iter()
        .map(|(m, a, w)| (m, &a * &exact_div(&big_w, &w).expect("lcm")))
        .collect();
    (terms, big_w)
}

/// Lifts a dual-space element `B(z) ∈ F[z]` to a multiplier in `Q[x, z]`
/// (denominators cleared, integer content removed).
pub(crate) fn lift_multiplier(scene: &Scene, b: &Polynomial<ResidueField>, mring: &Ring<Rationals>) -> QPoly {
    let n = scene.x_ring().nvars();
    let (terms, _) = lift_coefficients(scene.field(), b);
    let mut out = Vec::new();
    for (zm, a) in terms {
        let ax = scene.u_to_x_poly(&a);
        for (xm, q) in ax.terms() {
            let mut e = Monomial::one(2 * n);
            for i in 0..n {
                e.set_exp(i, xm.exp(i));
            }
            for (k, &i) in scene.dependent().iter().enumerate() {
                e.set_exp(n + i, zm.exp(k));
            }
            out.push((e, q.clone()));
        }
    }
    Polynomial::from_terms(mring, out)
}

/// Noetherian operators of the `P`-primary component of `Q`: the image of
/// `Q` in the punctual Hilbert scheme, its inverse system, and the lifts of
/// that inverse system to differential operators.
pub fn noetherian_operators(q: &Ideal<Rationals>, scene: Arc<Scene>, max_degree: usize) -> Result<OperatorRepresentation> {
    let gamma = gamma_image(q, &scene, max_degree)?;
    let v = dual_basis(&gamma.gb, scene.z_ring())?;
    let mring = multiplier_ring(scene.x_ring());
    let operators = v
        .basis()
        .iter()
        .map(|b| DiffOp::from_multiplier(scene.x_ring(), &lift_multiplier(&scene, b, &mring)).primitive())
        .collect();
    Ok(OperatorRepresentation {
        multiplicity: gamma.multiplicity,
        scene,
        operators,
        gamma,
        inverse_system: v,
    })
}

/// `length(R_P / Q R_P)`.
pub fn multiplicity(q: &Ideal<Rationals>, scene: &Scene, max_degree: usize) -> Result<usize> {
    Ok(gamma_image(q, scene, max_degree)?.multiplicity)
}
