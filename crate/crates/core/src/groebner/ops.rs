use super::{GroebnerBasis, Ideal};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{CoerceInto, MonomialOrder, PolyRing, Polynomial, Ring};

/// Moves `gens` into a ring whose variables are `perm` (new position `k`
/// holds old variable `perm[k]`), with the given order.
fn permuted<F: Field>(
    ring: &Ring<F>,
    perm: &[usize],
    order: MonomialOrder,
) -> (Ring<F>, Vec<Option<usize>>, Vec<Option<usize>>) {
    let names = perm.iter().map(|&i| ring.names()[i].clone()).collect();
    let new = PolyRing::new(ring.field().clone(), names, order);
    let mut fwd = vec![None; ring.nvars()];
    let mut back = vec![None; ring.nvars()];
    for (k, &i) in perm.iter().enumerate() {
        fwd[i] = Some(k);
        back[k] = Some(i);
    }
    (new, fwd, back)
}

fn rename_all<F: Field + CoerceInto<F>>(
    gens: &[Polynomial<F>],
    target: &Ring<F>,
    map: &[Option<usize>],
) -> Vec<Polynomial<F>> {
    gens.iter().map(|g| g.rename(target, map).expect("total map")).collect()
}

/// `I ∩ K[remaining variables]`, via a block order with `drop` in front.
pub fn eliminate<F: Field>(ideal: &Ideal<F>, drop: &[usize]) -> Result<Ideal<F>> {
    let ring = ideal.ring();
    let n = ring.nvars();
    let mut perm: Vec<usize> = drop.to_vec();
    perm.sort_unstable();
    perm.dedup();
    if perm.iter().any(|&i| i >= n) {
        return Err(Error::InvalidArgument("variable index out of range".into()));
    }
    if perm.is_empty() {
        return Ok(ideal.groebner().into_ideal());
    }
    let gens = substitute_linear(ring, ideal.gens(), &perm)?;
    let k = perm.len();
    perm.extend((0..n).filter(|i| !drop.contains(i)));
    let (er, fwd, back) = permuted(ring, &perm, MonomialOrder::Elimination(k));
    let gb = GroebnerBasis::compute(&er, &rename_all(&gens, &er, &fwd));
    let kept: Vec<_> = gb
        .elems()
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| m.exps()[..k].iter().all(|&e| e == 0)))
        .cloned()
        .collect();
    Ideal::new(ring, rename_all(&kept, ring, &back))
}

/// Uses generators of the form `c·v + r`, with `v` to be eliminated, `c` a
/// constant and `r` free of `v`, to substitute `v ↦ -r/c` everywhere else.
/// This leaves the elimination ideal unchanged. When several variables
/// qualify, the one occurring in the fewest other generators goes first.
fn substitute_linear<F: Field>(ring: &Ring<F>, gens: &[Polynomial<F>], drop: &[usize]) -> Result<Vec<Polynomial<F>>> {
    let field = ring.field();
    let mut gens: Vec<Polynomial<F>> = gens.to_vec();
    let mut free: Vec<usize> = drop.to_vec();
    loop {
        let mut best: Option<(usize, usize, usize)> = None;
        for (gi, g) in gens.iter().enumerate() {
            for &v in &free {
                if g.degree_in(v) != 1 || g.terms().iter().filter(|(m, _)| m.exp(v) > 0).count() != 1 {
                    continue;
                }
                let lone = g.terms().iter().any(|(m, _)| m.exp(v) == 1 && m.degree() == 1);
                if !lone {
                    continue;
                }
                let uses = gens.iter().enumerate().filter(|&(j, h)| j != gi && h.degree_in(v) > 0).count();
                if best.is_none_or(|(_, _, u)| uses < u) {
                    best = Some((gi, v, uses));
                }
            }
        }
        let Some((gi, v, _)) = best else {
            return Ok(gens);
        };
        let g = gens.swap_remove(gi);
        let c = g.coeff(&crate::poly::Monomial::var(ring.nvars(), v));
        let lin = crate::poly::monomial(ring, crate::poly::Monomial::var(ring.nvars(), v), c.clone());
        let image = (&g - &lin).scale(&field.neg(&field.inv(&c)?));
        let images: Vec<Option<Polynomial<F>>> = (0..ring.nvars())
            .map(|i| Some(if i == v { image.clone() } else { crate::poly::var(ring, i) }))
            .collect();
        gens = gens
            .iter()
            .map(|h| if h.degree_in(v) > 0 { h.substitute(ring, &images) } else { Ok(h.clone()) })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .filter(|h| !h.is_zero())
            .collect();
        free.retain(|&x| x != v);
    }
}

/// Adds one variable `t` in front of the ring.
fn with_front_var<F: Field>(ring: &Ring<F>, name: &str) -> (Ring<F>, Vec<Option<usize>>) {
    let mut names = vec![name.to_string()];
    names.extend(ring.names().iter().cloned());
    let r = PolyRing::new(ring.field().clone(), names, MonomialOrder::Elimination(1));
    (r, (1..=ring.nvars()).map(Some).collect())
}

fn drop_front_var<F: Field>(ring: &Ring<F>, ext: &GroebnerBasis<F>) -> Result<Ideal<F>> {
    let mut back = vec![None];
    back.extend((0..ring.nvars()).map(Some));
    let kept: Vec<_> = ext
        .elems()
        .iter()
        .filter(|g| g.degree_in(0) == 0)
        .map(|g| g.rename(ring, &back))
        .collect::<Result<_>>()?;
    Ideal::new(ring, kept)
}

/// `I : f^∞`.
pub fn saturate<F: Field>(ideal: &Ideal<F>, f: &Polynomial<F>) -> Result<Ideal<F>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Ok(ideal.clone());
    }
    if f.len() == 1 && ideal.is_homogeneous() {
        let mut cur = ideal.clone();
        for i in f.lm().support().collect::<Vec<_>>() {
            cur = saturate_by_var(&cur, i)?;
        }
        return Ok(cur);
    }
    saturate_general(ideal, f)
}

/// `I : f^∞` by adjoining `1 - t f` and eliminating `t`.
pub fn saturate_general<F: Field>(ideal: &Ideal<F>, f: &Polynomial<F>) -> Result<Ideal<F>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ring = ideal.ring();
    let (ext, map) = with_front_var(ring, "_t");
    let mut gens = rename_all(ideal.gens(), &ext, &map);
    let t = crate::poly::var(&ext, 0);
    let fe = f.rename(&ext, &map)?;
    gens.push(&crate::poly::one(&ext) - &(&t * &fe));
    drop_front_var(ring, &GroebnerBasis::compute(&ext, &gens))
}

/// `I : x_i^∞`. Homogeneous ideals use a grevlex basis with `x_i` last, where
/// the saturation is obtained by dividing out powers of `x_i`.
pub fn saturate_by_var<F: Field>(ideal: &Ideal<F>, i: usize) -> Result<Ideal<F>> {
    let ring = ideal.ring();
    if !ideal.is_homogeneous() {
        return saturate_general(ideal, &crate::poly::var(ring, i));
    }
    let n = ring.nvars();
    let mut perm: Vec<usize> = (0..n).filter(|&j| j != i).collect();
    perm.push(i);
    let (gr, fwd, back) = permuted(ring, &perm, MonomialOrder::GrevLex);
    let gb = GroebnerBasis::compute(&gr, &rename_all(ideal.gens(), &gr, &fwd));
    let divided: Vec<_> = gb
        .elems()
        .iter()
        .map(|g| {
            let k = g.terms().iter().map(|(m, _)| m.exp(n - 1)).min().unwrap_or(0);
            let terms = g
                .terms()
                .iter()
                .map(|(m, c)| {
                    let mut m = m.clone();
                    m.set_exp(n - 1, m.exp(n - 1) - k);
                    (m, c.clone())
                })
                .collect();
            Polynomial::from_terms(&gr, terms)
        })
        .collect();
    Ideal::new(ring, rename_all(&divided, ring, &back))
}

/// `I ∩ J` via `t I + (1 - t) J`, eliminating `t`.
pub fn intersect<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> Result<Ideal<F>> {
    let ring = a.ring();
    let (ext, map) = with_front_var(ring, "_t");
    let t = crate::poly::var(&ext, 0);
    let one_minus_t = &crate::poly::one(&ext) - &t;
    let mut gens = Vec::new();
    for g in rename_all(a.gens(), &ext, &map) {
        gens.push(&t * &g);
    }
    for g in rename_all(b.gens(), &ext, &map) {
        gens.push(&one_minus_t * &g);
    }
    drop_front_var(ring, &GroebnerBasis::compute(&ext, &gens))
}

/// A maximal set of variables independent modulo `P`, of size `dim R/P`.
///
/// Candidates are the variable sets containing no leading monomial of the
/// grevlex basis; among those of largest size, the one built greedily from
/// the highest-indexed variables down wins. The choice is then certified by
/// elimination. Returned sorted ascending.
pub fn independent_set<F: Field>(p: &Ideal<F>) -> Result<Vec<usize>> {
    let gb = p.groebner_in(MonomialOrder::GrevLex);
    if gb.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let n = p.ring().nvars();
    let lms = gb.leading_monomials();
    let independent = |set: u64| lms.iter().all(|m| m.support().any(|i| set & (1 << i) == 0));
    let best = if n <= 20 {
        let mut best: Option<(u32, Vec<usize>, u64)> = None;
        for set in 0u64..(1 << n) {
            if !independent(set) {
                continue;
            }
            let size = set.count_ones();
            let mut desc: Vec<usize> = (0..n).rev().filter(|&i| set & (1 << i) != 0).collect();
            desc.shrink_to_fit();
            let better = match &best {
                None => true,
                Some((s, d, _)) => size > *s || (size == *s && desc > *d),
            };
            if better {
                best = Some((size, desc, set));
            }
        }
        best.expect("empty set is independent").2
    } else {
        let mut set = 0u64;
        for i in (0..n).rev() {
            if independent(set | (1 << i)) {
                set |= 1 << i;
            }
        }
        set
    };
    let chosen: Vec<usize> = (0..n).filter(|&i| best & (1 << i) != 0).collect();
    let complement: Vec<usize> = (0..n).filter(|&i| best & (1 << i) == 0).collect();
    if !eliminate(p, &complement)?.gens().is_empty() {
        return Err(Error::InvalidArgument(
            "independent set failed elimination certification".into(),
        ));
    }
    Ok(chosen)
}
