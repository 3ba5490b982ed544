use super::forward::{noetherian_operators, OperatorRepresentation};
use super::Scene;
use crate::error::{Error, Result};
use crate::field::{Field, Rational, Rationals};
use crate::groebner::Ideal;
use crate::poly::{MonomialOrder, PolyRing, Polynomial, Ring};
use crate::weyl::multiplier_ring;
use std::sync::Arc;

type QPoly = Polynomial<Rationals>;

/// Exponential-polynomial solutions of the PDE system `Q(∂z) ψ = 0`, one
/// Noetherian multiplier `B_l(x, z)` per operator.
#[derive(Clone, Debug)]
pub struct SolutionFamily {
    pub scene: Arc<Scene>,
    pub multipliers: Vec<QPoly>,
    /// The ring `x_1..x_n, z_1..z_n` of the multipliers.
    pub multiplier_ring: Ring<Rationals>,
}

pub fn solution_family(q: &Ideal<Rationals>, scene: Arc<Scene>, max_degree: usize) -> Result<SolutionFamily> {
    let rep = noetherian_operators(q, scene, max_degree)?;
    Ok(SolutionFamily::from_operators(&rep))
}

impl SolutionFamily {
    pub fn from_operators(rep: &OperatorRepresentation) -> SolutionFamily {
        SolutionFamily {
            scene: rep.scene.clone(),
            multipliers: rep.multipliers(),
            multiplier_ring: multiplier_ring(rep.scene.x_ring()),
        }
    }

    /// Ring of the sample solutions: just the `z` variables.
    pub fn z_ring(&self) -> Ring<Rationals> {
        let n = self.scene.x_ring().nvars();
        PolyRing::new(Rationals, self.multiplier_ring.names()[n..].to_vec(), MonomialOrder::GrevLex)
    }

    /// The variety, as `V(p1, p2, …)`.
    pub fn variety_text(&self) -> String {
        format!("V({})", self.scene.prime())
    }

    /// The integral representation of the solution space.
    pub fn template(&self) -> String {
        format!("ψ(z) = Σ_l ∫_{{{}}} B_l(x,z) exp(x^t z) dμ_l(x)", self.variety_text())
    }

    /// `B_l(p, z)` as a polynomial in `z` (`l` counts from 1).
    pub fn multiplier_at(&self, point: &[Rational], l: usize) -> Result<QPoly> {
        let x_ring = self.scene.x_ring();
        let n = x_ring.nvars();
        if point.len() != n {
            return Err(Error::InvalidArgument(format!("point needs {n} coordinates")));
        }
        if l == 0 || l > self.multipliers.len() {
            return Err(Error::InvalidArgument(format!(
                "index {l} out of range 1..={}",
                self.multipliers.len()
            )));
        }
        if self.scene.prime().gens().iter().any(|g| !Rationals.is_zero(&g.evaluate(point))) {
            return Err(Error::PointNotOnVariety);
        }
        let z_ring = self.z_ring();
        let images: Vec<Option<QPoly>> = (0..2 * n)
            .map(|i| {
                Some(if i < n {
                    crate::poly::constant(&z_ring, point[i].clone())
                } else {
                    crate::poly::var(&z_ring, i - n)
                })
            })
            .collect();
        self.multipliers[l - 1].substitute(&z_ring, &images)
    }

    /// The sample solution `B_l(p, z) exp(p^t z)` as text.
    pub fn sample(&self, point: &[Rational], l: usize) -> Result<String> {
        let b = self.multiplier_at(point, l)?;
        let z_ring = self.z_ring();
        let exponent = Polynomial::from_terms(
            &z_ring,
            point
                .iter()
                .enumerate()
                .map(|(i, p)| (crate::poly::Monomial::var(point.len(), i), p.clone()))
                .collect(),
        );
        Ok(render_sample(&b, &exponent))
    }
}

/// `B * exp(e)`, dropping whichever factor is trivial.
pub fn render_sample(b: &QPoly, exponent: &QPoly) -> String {
    if exponent.is_zero() {
        return b.to_string();
    }
    let e = format!("exp({exponent})");
    if b.is_one() {
        e
    } else if b.len() == 1 {
        format!("{b}*{e}")
    } else {
        format!("({b})*{e}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_forms() {
        let r = PolyRing::new(Rationals, vec!["z1".into(), "z2".into()], MonomialOrder::GrevLex);
        let one = crate::poly::one(&r);
        let e = crate::poly::parse_polynomial("2*z1+z2", &r).unwrap();
        assert_eq!(render_sample(&one, &e), "exp(2*z1+z2)");
        let b = crate::poly::parse_polynomial("z1^2-z2", &r).unwrap();
        assert_eq!(render_sample(&b, &e), "(z1^2-z2)*exp(2*z1+z2)");
        assert_eq!(render_sample(&b, &crate::poly::zero(&r)), "z1^2-z2");
    }
}
