use super::Monomial;
use std::cmp::Ordering;

/// Monomial orders. Variable 0 is the largest variable in every order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    /// Two blocks: the first `k` variables, then the rest. Blocks are
    /// compared lexicographically, each block by grevlex. Any monomial
    /// involving the front block beats every monomial free of it.
    Elimination(usize),
}

fn grevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    da.cmp(&db).then_with(|| {
        for i in (0..a.len()).rev() {
            if a[i] != b[i] {
                return b[i].cmp(&a[i]);
            }
        }
        Ordering::Equal
    })
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exps(), b.exps());
        match *self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GrevLex => grevlex(a, b),
            MonomialOrder::Elimination(k) => {
                let k = k.min(a.len());
                grevlex(&a[..k], &b[..k]).then_with(|| grevlex(&a[k..], &b[k..]))
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::GrevLex => "grevlex".into(),
            MonomialOrder::Elimination(k) => format!("elim({k})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono(e: &[u16]) -> Monomial {
        Monomial::new(e.iter().copied())
    }

    #[test]
    fn grevlex_breaks_degree_ties_on_last_variable() {
        let o = MonomialOrder::GrevLex;
        // x1^2 > x2*x3
        assert_eq!(o.cmp(&mono(&[2, 0, 0, 0]), &mono(&[0, 1, 1, 0])), Ordering::Greater);
        // x1*x2 > x3*x4
        assert_eq!(o.cmp(&mono(&[1, 1, 0, 0]), &mono(&[0, 0, 1, 1])), Ordering::Greater);
        // x2^2 > x1*x4
        assert_eq!(o.cmp(&mono(&[0, 2, 0, 0]), &mono(&[1, 0, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn lex_prefers_first_variable() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.cmp(&mono(&[1, 0, 0, 1]), &mono(&[0, 2, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn elimination_front_block_dominates() {
        let o = MonomialOrder::Elimination(1);
        assert_eq!(o.cmp(&mono(&[1, 0, 0]), &mono(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&mono(&[0, 2, 0]), &mono(&[0, 1, 0])), Ordering::Greater);
    }

    fn orders() -> impl Strategy<Value = MonomialOrder> {
        prop_oneof![
            Just(MonomialOrder::Lex),
            Just(MonomialOrder::GrevLex),
            (0usize..=4).prop_map(MonomialOrder::Elimination),
        ]
    }

    fn monos() -> impl Strategy<Value = Monomial> {
        prop::collection::vec(0u16..5, 4).prop_map(Monomial::new)
    }

    proptest! {
        #[test]
        fn order_axioms(o in orders(), a in monos(), b in monos(), c in monos()) {
            // totality / antisymmetry
            let ab = o.cmp(&a, &b);
            prop_assert_eq!(ab, o.cmp(&b, &a).reverse());
            if ab == Ordering::Equal {
                prop_assert_eq!(&a, &b);
            }
            // multiplicativity
            prop_assert_eq!(ab, o.cmp(&a.mul(&c), &b.mul(&c)));
            // 1 is minimal
            prop_assert_ne!(o.cmp(&Monomial::one(4), &a), Ordering::Greater);
            // transitivity
            if ab != Ordering::Less && o.cmp(&b, &c) != Ordering::Less {
                prop_assert_ne!(o.cmp(&a, &c), Ordering::Less);
            }
        }
    }
}
