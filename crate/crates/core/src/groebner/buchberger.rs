use crate::field::Field;
use crate::poly::{Monomial, Polynomial, Ring};
use std::cmp::Ordering;

struct Entry<F: Field> {
    poly: Polynomial<F>,
    sugar: u32,
    active: bool,
}

impl<F: Field> Entry<F> {
    fn lm(&self) -> &Monomial {
        self.poly.lm()
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

/// Reducers available during a reduction: leading monomial masks plus the
/// polynomials themselves.
pub(crate) struct Reducers<'a, F: Field> {
    polys: Vec<(&'a Polynomial<F>, u64)>,
}

impl<'a, F: Field> Reducers<'a, F> {
    pub(crate) fn new(polys: impl IntoIterator<Item = &'a Polynomial<F>>) -> Self {
        Reducers {
            polys: polys.into_iter().map(|p| (p, p.lm().divmask())).collect(),
        }
    }

    /// The shortest reducer whose leading monomial divides `m`.
    fn find(&self, m: &Monomial) -> Option<&'a Polynomial<F>> {
        let mask = m.divmask();
        let mut best: Option<&'a Polynomial<F>> = None;
        for &(p, pm) in &self.polys {
            if pm & !mask != 0 || !p.lm().divides(m) {
                continue;
            }
            if best.is_none_or(|b| p.len() < b.len()) {
                best = Some(p);
            }
        }
        best
    }

    /// Fully reduces `f`: no term of the result is divisible by a leading
    /// monomial of a reducer. Reducers must be monic.
    pub(crate) fn reduce(&self, f: &Polynomial<F>) -> Polynomial<F> {
        let ring = f.ring().clone();
        let mut rest: Vec<(Monomial, F::Elem)> = f.terms().to_vec();
        let mut start = 0;
        let mut done: Vec<(Monomial, F::Elem)> = Vec::new();
        while start < rest.len() {
            let (m, c) = &rest[start];
            match self.find(m) {
                None => {
                    done.push(rest[start].clone());
                    start += 1;
                }
                Some(g) => {
                    let q = m.div(g.lm()).expect("divides");
                    let c = c.clone();
                    rest = sub_scaled(&ring, &rest[start + 1..], &c, &q, &g.terms()[1..]);
                    start = 0;
                }
            }
        }
        Polynomial::from_sorted(&ring, done)
    }

    /// Reduces only until the leading term is irreducible.
    pub(crate) fn top_reduce(&self, f: &Polynomial<F>) -> Polynomial<F> {
        let ring = f.ring().clone();
        let mut rest: Vec<(Monomial, F::Elem)> = f.terms().to_vec();
        while let Some((m, c)) = rest.first() {
            let Some(g) = self.find(m) else { break };
            let q = m.div(g.lm()).expect("divides");
            let c = c.clone();
            rest = sub_scaled(&ring, &rest[1..], &c, &q, &g.terms()[1..]);
        }
        Polynomial::from_sorted(&ring, rest)
    }
}

/// `a - c * q * b` for sorted term slices.
fn sub_scaled<F: Field>(
    ring: &Ring<F>,
    a: &[(Monomial, F::Elem)],
    c: &F::Elem,
    q: &Monomial,
    b: &[(Monomial, F::Elem)],
) -> Vec<(Monomial, F::Elem)> {
    let field = ring.field();
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut bj = b.iter().map(|(m, d)| (m.mul(q), d)).peekable();
    while i < a.len() {
        let Some((bm, bd)) = bj.peek() else { break };
        match ring.cmp(&a[i].0, bm) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((bm.clone(), field.neg(&field.mul(c, bd))));
                bj.next();
            }
            Ordering::Equal => {
                let v = field.sub(&a[i].1, &field.mul(c, bd));
                if !field.is_zero(&v) {
                    out.push((a[i].0.clone(), v));
                }
                i += 1;
                bj.next();
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for (bm, bd) in bj {
        out.push((bm, field.neg(&field.mul(c, bd))));
    }
    out
}

fn spoly<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>, lcm: &Monomial) -> Polynomial<F> {
    let field = f.field();
    let a = lcm.div(f.lm()).expect("lcm");
    let b = lcm.div(g.lm()).expect("lcm");
    let ring = f.ring();
    let fa: Vec<_> = f.terms()[1..].iter().map(|(m, c)| (m.mul(&a), c.clone())).collect();
    Polynomial::from_sorted(ring, sub_scaled(ring, &fa, &field.one(), &b, &g.terms()[1..]))
}

fn sugar_of<F: Field>(p: &Polynomial<F>) -> u32 {
    p.total_degree().unwrap_or(0)
}

/// Reduced Gröbner basis of the polynomials (all in one ring; the ring's
/// order is used). Output is sorted by decreasing leading monomial.
pub fn groebner_basis<F: Field>(ring: &Ring<F>, gens: &[Polynomial<F>]) -> Vec<Polynomial<F>> {
    let mut entries: Vec<Entry<F>> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    // Seed with inter-reduced, monic generators, smallest first.
    let mut input: Vec<Polynomial<F>> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.monic()).collect();
    input.sort_by(|a, b| ring.cmp(a.lm(), b.lm()).then(a.len().cmp(&b.len())));
    for g in input {
        let h = {
            let active: Vec<&Polynomial<F>> = entries.iter().filter(|e| e.active).map(|e| &e.poly).collect();
            Reducers::new(active).reduce(&g)
        };
        if h.is_zero() {
            continue;
        }
        let sugar = sugar_of(&g);
        add_element(&mut entries, &mut pairs, h.monic(), sugar);
    }

    while !pairs.is_empty() {
        let k = (0..pairs.len())
            .min_by(|&a, &b| {
                let (p, q) = (&pairs[a], &pairs[b]);
                p.sugar
                    .cmp(&q.sugar)
                    .then_with(|| ring.cmp(&p.lcm, &q.lcm))
                    .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
            })
            .unwrap();
        let pair = pairs.swap_remove(k);
        let s = spoly(&entries[pair.i].poly, &entries[pair.j].poly, &pair.lcm);
        if s.is_zero() {
            continue;
        }
        let h = {
            let active: Vec<&Polynomial<F>> = entries.iter().filter(|e| e.active).map(|e| &e.poly).collect();
            Reducers::new(active).reduce(&s)
        };
        if h.is_zero() {
            continue;
        }
        add_element(&mut entries, &mut pairs, h.monic(), pair.sugar);
    }

    let mut basis: Vec<Polynomial<F>> = entries.into_iter().filter(|e| e.active).map(|e| e.poly).collect();
    // minimal basis: drop elements whose leading monomial is a proper multiple
    let lms: Vec<Monomial> = basis.iter().map(|p| p.lm().clone()).collect();
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            if i != j && keep[j] && lms[j].divides(&lms[i]) && (lms[j] != lms[i] || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut k = 0;
    basis.retain(|_| {
        k += 1;
        keep[k - 1]
    });
    // inter-reduce tails
    let mut reduced = Vec::with_capacity(basis.len());
    for i in 0..basis.len() {
        let others = Reducers::new(basis.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, p)| p));
        reduced.push(others.reduce(&basis[i]).monic());
    }
    reduced.sort_by(|a, b| ring.cmp(b.lm(), a.lm()));
    reduced
}

fn add_element<F: Field>(entries: &mut Vec<Entry<F>>, pairs: &mut Vec<Pair>, h: Polynomial<F>, sugar: u32) {
    let hl = h.lm().clone();
    let new = entries.len();

    // Gebauer–Möller: candidate pairs (g, h)
    let mut cands: Vec<(usize, Monomial, u32)> = Vec::new();
    for (i, e) in entries.iter().enumerate() {
        if !e.active {
            continue;
        }
        let lcm = e.lm().lcm(&hl);
        let s = (e.sugar + lcm.degree() - e.lm().degree()).max(sugar + lcm.degree() - hl.degree());
        cands.push((i, lcm, s));
    }
    let coprime: Vec<bool> = cands.iter().map(|(i, _, _)| entries[*i].lm().is_coprime(&hl)).collect();
    let mut keep = vec![false; cands.len()];
    for a in 0..cands.len() {
        if coprime[a] {
            keep[a] = true;
            continue;
        }
        // drop if another candidate's lcm properly divides this one, or an
        // equal lcm that comes earlier survives
        let la = &cands[a].1;
        let dominated = (0..cands.len()).any(|b| {
            if b == a {
                return false;
            }
            let lb = &cands[b].1;
            if !lb.divides(la) {
                return false;
            }
            lb != la || b < a
        });
        keep[a] = !dominated;
    }
    // product criterion: coprime pairs never need reducing; if one of a
    // group of equal lcms was coprime, the whole group is dropped
    let mut fresh = Vec::new();
    for a in 0..cands.len() {
        if !keep[a] || coprime[a] {
            continue;
        }
        let la = &cands[a].1;
        let group_has_coprime = (0..cands.len()).any(|b| coprime[b] && &cands[b].1 == la);
        if group_has_coprime {
            continue;
        }
        fresh.push(Pair {
            i: cands[a].0,
            j: new,
            lcm: cands[a].1.clone(),
            sugar: cands[a].2,
        });
    }

    // chain criterion on old pairs
    pairs.retain(|p| {
        if !hl.divides(&p.lcm) {
            return true;
        }
        let li = entries[p.i].lm().lcm(&hl);
        let lj = entries[p.j].lm().lcm(&hl);
        li == p.lcm || lj == p.lcm
    });
    pairs.extend(fresh);

    for e in entries.iter_mut() {
        if e.active && hl.divides(e.lm()) {
            e.active = false;
        }
    }
    entries.push(Entry {
        poly: h,
        sugar,
        active: true,
    });
}
