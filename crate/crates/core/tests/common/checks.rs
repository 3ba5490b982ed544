//! Independent oracles shared by the topic suites and the acceptance run.
//! Each check returns `Err` with a description of the first failure.

use super::*;
use noether::groebner::{saturate, GroebnerBasis};
use noether::inverse::{annihilator, briancon_point, dual_basis};
use noether::join::{join, maximal_power, symbolic_power, zn_membership_gb};
use noether::primary::{multiplicity, OperatorRepresentation, DEFAULT_MAX_DEGREE};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type QPoly = Polynomial<Rationals>;
pub type Check = std::result::Result<(), String>;

/// Plain multivariate division, written out independently of the library's
/// reducer.
pub fn remainder(f: &QPoly, g: &[QPoly]) -> QPoly {
    let field = Rationals;
    let mut p = f.clone();
    let mut r = noether::poly::zero(f.ring());
    while !p.is_zero() {
        let (m, c) = p.leading_term().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        match g.iter().find(|h| h.lm().divides(&m)) {
            Some(h) => {
                let q = field.div(&c, h.lc()).unwrap();
                p = &p - &h.mul_term(&m.div(h.lm()).unwrap(), &q);
            }
            None => {
                let t = noether::poly::monomial(f.ring(), m, c);
                r = &r + &t;
                p = &p - &t;
            }
        }
    }
    r
}

/// Monic, inter-reduced, S-pairs reduce to zero, and contains `gens`.
pub fn check_reduced_basis(gens: &[QPoly], gb: &GroebnerBasis<Rationals>) -> Check {
    let g = gb.elems();
    for (i, a) in g.iter().enumerate() {
        if !Rationals.is_one(a.lc()) {
            return Err(format!("{a} is not monic"));
        }
        for b in &g[i + 1..] {
            let l = a.lm().lcm(b.lm());
            let s = &a.mul_term(&l.div(a.lm()).unwrap(), &Rationals.one())
                - &b.mul_term(&l.div(b.lm()).unwrap(), &Rationals.one());
            if !remainder(&s, g).is_zero() {
                return Err(format!("S({a}, {b}) does not reduce to zero"));
            }
        }
        for (j, b) in g.iter().enumerate() {
            if i != j && a.terms().iter().any(|(m, _)| b.lm().divides(m)) {
                return Err(format!("{a} is not reduced by {b}"));
            }
        }
    }
    match gens.iter().find(|f| !remainder(f, g).is_zero()) {
        Some(f) => Err(format!("generator {f} not in the basis ideal")),
        None => Ok(()),
    }
}

pub fn spair_residuals(seed: u64, per_order: usize) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for order in [MonomialOrder::GrevLex, MonomialOrder::Lex, MonomialOrder::Elimination(1)] {
        let r = PolyRing::with_prefix(Rationals, "x", 3, order);
        for _ in 0..per_order {
            let gens: Vec<QPoly> = (0..3).map(|_| random_poly(&mut rng, &r, 3, 3, 4)).collect();
            check_reduced_basis(&gens, &GroebnerBasis::compute(&r, &gens))?;
        }
    }
    Ok(())
}

fn y_ring(c: usize) -> Ring<Rationals> {
    PolyRing::with_prefix(Rationals, "y", c, MonomialOrder::GrevLex)
}

fn z_ring(c: usize) -> Ring<Rationals> {
    PolyRing::with_prefix(Rationals, "z", c, MonomialOrder::GrevLex)
}

/// `Ann(I^⊥) = I`, plus a direct check that every generator kills every
/// dual element.
fn round_trip(i: &Ideal<Rationals>) -> Check {
    let c = i.ring().nvars();
    let gb = i.groebner();
    let v = dual_basis(&gb, &z_ring(c)).map_err(|e| format!("{i:?}: {e}"))?;
    if v.dim() != gb.colength().unwrap() {
        return Err(format!("{i:?}: dual dimension {} differs from colength", v.dim()));
    }
    for g in gb.elems() {
        for b in v.basis() {
            let g_z = g.rename(v.ring(), &(0..c).map(Some).collect::<Vec<_>>()).unwrap();
            if !noether::inverse::contract(&g_z, b).is_zero() {
                return Err(format!("{g} does not kill {b}"));
            }
        }
    }
    let back = annihilator(&v, i.ring()).map_err(|e| e.to_string())?;
    if back.elems() != gb.elems() {
        return Err(format!("{i:?}: annihilator of the dual is {back:?}"));
    }
    Ok(())
}

/// 50 random Briançon points and the powers `⟨y⟩^r`, `r ≤ 4`.
pub fn duality_round_trips(seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = y_ring(2);
    for _ in 0..50 {
        let m = rand::Rng::gen_range(&mut rng, 1..=6u32);
        let a: Vec<Rational> = (1..m)
            .map(|_| {
                let num = rand::Rng::gen_range(&mut rng, -9i64..=9);
                let den = rand::Rng::gen_range(&mut rng, 1i64..=4);
                Rationals.div(&Rationals.from_int(num), &Rationals.from_int(den)).unwrap()
            })
            .collect();
        round_trip(&briancon_point(&r, m, &a).unwrap())?;
    }
    for c in 1..=3 {
        for k in 1..=4 {
            round_trip(&maximal_power(&y_ring(c), k))?;
        }
    }
    Ok(())
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// The primes used for the symbolic-power and Zariski–Nagata checks.
pub fn fixture_primes() -> Vec<Ideal<Rationals>> {
    vec![ideal(&ring(4), TWISTED_CUBIC), ideal(&ring(4), LINE_P)]
}

/// `mult(P^(r)) = binom(c + r - 1, c)` for `r ≤ 3`.
pub fn symbolic_power_multiplicities() -> Check {
    for p in fixture_primes() {
        let s = scene(&p);
        let c = s.codim();
        for r in 1..=3u32 {
            let pr = symbolic_power(&p, r).map_err(|e| e.to_string())?;
            let m = multiplicity(&pr, &s, DEFAULT_MAX_DEGREE).map_err(|e| e.to_string())?;
            let want = binom(c + r as usize - 1, c);
            if m != want {
                return Err(format!("{p:?}^({r}) has multiplicity {m}, expected {want}"));
            }
        }
    }
    Ok(())
}

/// Zariski–Nagata membership against membership in `J ⋆ m^r` on `samples`
/// polynomials per fixture and power; half are random combinations of
/// generators of the join so that both answers occur.
pub fn zn_agrees_with_join(seed: u64, samples: usize) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for p in fixture_primes() {
        let r = p.ring().clone();
        for k in 1..=3u32 {
            let jm = join(&p, &maximal_power(&r, k)).map_err(|e| e.to_string())?;
            let jm_gb = jm.groebner();
            let p_gb = p.groebner();
            let mut members = 0;
            for t in 0..samples {
                let f = if t % 2 == 0 {
                    random_poly(&mut rng, &r, 4, 3, 5)
                } else {
                    jm.gens()
                        .iter()
                        .take(4)
                        .map(|g| g * &random_poly(&mut rng, &r, 2, 1, 3))
                        .fold(noether::poly::zero(&r), |a, b| &a + &b)
                };
                let by_join = jm_gb.contains(&f);
                members += by_join as usize;
                if by_join != zn_membership_gb(&f, &p_gb, k) {
                    return Err(format!("disagreement on {f} for r = {k}"));
                }
            }
            if members == 0 {
                return Err(format!("no members sampled for r = {k}"));
            }
        }
    }
    Ok(())
}

/// `P^(k+1) ⊆ Q` where `k` is the order of the representation.
pub fn order_bound(q: &Ideal<Rationals>, rep: &OperatorRepresentation) -> Check {
    let k = rep.order();
    let p = rep.scene.prime();
    let q_gb = q.groebner();
    let pk = p.power(k + 1);
    match pk.gens().iter().find(|g| !q_gb.contains(g)) {
        Some(g) => Err(format!("{g} lies in P^{} but not in Q", k + 1)),
        None => Ok(()),
    }
}

/// The primary ideal used for the `k`-th row of the benchmark table:
/// `(x1^2-x2x3)^k, (x1x2-x3x4)^k, (x2^2-x1x4)^k` saturated by `x1x2x3x4`.
pub fn power_ideal(k: u32) -> (Ideal<Rationals>, Ideal<Rationals>) {
    let r = ring(4);
    let p = ideal(&r, TWISTED_CUBIC);
    let j = Ideal::new(&r, p.gens().iter().map(|g| g.pow(k))).unwrap();
    let q = saturate(&j, &poly(&r, "x1*x2*x3*x4")).unwrap();
    (q, p)
}

/// Splits a rendered sample `B*exp(L)` (either factor may be absent) into `B` and the point read off the
/// linear form `L`, then checks that every generator `g` of `q`, read as
/// `g(∂z)`, kills it. Uses `∂_i (B e^{p·z}) = (∂_i B + p_i B) e^{p·z}`.
pub fn sample_is_annihilated(text: &str, q: &Ideal<Rationals>, zr: &Ring<Rationals>) -> Check {
    let (b, lin) = match text.rfind("exp(") {
        Some(at) => (text[..at].trim_end_matches('*'), &text[at + 4..text.len() - 1]),
        None => (text, "0"),
    };
    let b = if b.is_empty() { "1" } else { b };
    let b = noether::poly::parse_polynomial(b, zr).map_err(|e| e.to_string())?;
    let lin = noether::poly::parse_polynomial(lin, zr).map_err(|e| e.to_string())?;
    let n = zr.nvars();
    let pt: Vec<Rational> = (0..n).map(|i| lin.coeff(&Monomial::var(n, i))).collect();
    for g in q.gens() {
        let mut total = noether::poly::zero(zr);
        for (m, c) in g.terms() {
            let mut t = b.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    t = &t.partial_derivative(i) + &t.scale(&pt[i]);
                }
            }
            total = &total + &t.scale(c);
        }
        if !total.is_zero() {
            return Err(format!("{g} leaves {total} on {text}"));
        }
    }
    Ok(())
}
