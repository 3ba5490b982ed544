mod common;

use common::*;
use noether::field::{Field, Rationals};
use noether::poly::{exact_div, gcd, parse_polynomial, Monomial, MonomialOrder, PolyRing, Polynomial};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_poly(n: usize) -> impl Strategy<Value = Polynomial<Rationals>> {
    prop::collection::vec((prop::collection::vec(0u16..4, n), -6i64..=6), 0..6).prop_map(move |ts| {
        let r = ring(n);
        Polynomial::from_terms(&r, ts.into_iter().map(|(e, c)| (Monomial::new(e), Rationals.from_int(c))).collect())
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in arb_poly(3), b in arb_poly(3), c in arb_poly(3)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn print_parse_round_trip(a in arb_poly(4)) {
        let back = parse_polynomial(&a.to_string(), a.ring()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn leibniz_rule(a in arb_poly(3), b in arb_poly(3), i in 0usize..3) {
        let lhs = (&a * &b).partial_derivative(i);
        let rhs = &(&a.partial_derivative(i) * &b) + &(&a * &b.partial_derivative(i));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn degree_is_additive(a in arb_poly(3), b in arb_poly(3)) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let p = &a * &b;
        prop_assert_eq!(p.total_degree(), Some(a.total_degree().unwrap() + b.total_degree().unwrap()));
        prop_assert_eq!(p.lm(), &a.lm().mul(b.lm()));
    }
}

#[test]
fn gcd_recovers_common_factor() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let r = ring(3);
    for _ in 0..40 {
        let a = random_poly(&mut rng, &r, 4, 3, 5);
        let b = random_poly(&mut rng, &r, 4, 3, 5);
        let c = random_poly(&mut rng, &r, 3, 2, 5);
        if a.is_zero() || b.is_zero() || c.is_zero() {
            continue;
        }
        let g = gcd(&(&a * &c), &(&b * &c));
        // c divides the gcd, and the gcd divides both products
        assert!(exact_div(&g, &c).is_some(), "c = {c}, g = {g}");
        assert!(exact_div(&(&a * &c), &g).is_some());
        assert!(exact_div(&(&b * &c), &g).is_some());
    }
}

#[test]
fn canonical_printing() {
    let r = ring(4);
    assert_eq!(poly(&r, "x2*x3 - x1^2").to_string(), "-x1^2+x2*x3");
    assert_eq!(poly(&r, "(x1+1)^2").to_string(), "x1^2+2*x1+1");
    assert_eq!(poly(&r, "x1/2 - 3/4").to_string(), "1/2*x1-3/4");
    assert_eq!(poly(&r, "0").to_string(), "0");
    let lex = PolyRing::new(Rationals, r.names().to_vec(), MonomialOrder::Lex);
    assert_eq!(poly(&lex, "x2^3 + x1").to_string(), "x1+x2^3");
}

#[test]
fn substitution_and_evaluation() {
    let r = ring(2);
    let f = poly(&r, "x1^2*x2 - 3*x2 + 1");
    let images = vec![Some(poly(&r, "x1+x2")), Some(poly(&r, "x2"))];
    assert_eq!(f.substitute(&r, &images).unwrap(), poly(&r, "x1^2*x2+2*x1*x2^2+x2^3-3*x2+1"));
    let v = f.evaluate(&[Rationals.from_int(2), Rationals.from_int(5)]);
    assert_eq!(v, Rationals.from_int(6));
}
