mod common;

use common::*;
use noether::field::{Field, Rationals, RationalFunctions, ResidueField};
use noether::poly::{var, MonomialOrder, PolyRing, Ring};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn u_ring(n: usize) -> Ring<Rationals> {
    PolyRing::new(Rationals, (1..=n).map(|i| format!("u{i}")).collect(), MonomialOrder::GrevLex)
}

fn cubic_field() -> ResidueField {
    let r = u_ring(4);
    let p = noether::poly::parse_polynomial_list("u1^2-u2*u3, u1*u2-u3*u4, u2^2-u1*u4", &r).unwrap();
    ResidueField::new(&r, 2, &p).unwrap()
}

fn check_axioms<F: Field>(f: &F, a: &F::Elem, b: &F::Elem, c: &F::Elem) {
    assert_eq!(f.add(a, b), f.add(b, a));
    assert_eq!(f.mul(a, b), f.mul(b, a));
    assert_eq!(f.mul(&f.mul(a, b), c), f.mul(a, &f.mul(b, c)));
    assert_eq!(f.add(&f.add(a, b), c), f.add(a, &f.add(b, c)));
    assert_eq!(f.mul(a, &f.add(b, c)), f.add(&f.mul(a, b), &f.mul(a, c)));
    assert!(f.is_zero(&f.sub(a, a)));
    assert_eq!(f.mul(a, &f.one()), *a);
    if !f.is_zero(a) {
        assert!(f.is_one(&f.mul(a, &f.inv(a).unwrap())));
    } else {
        assert!(f.inv(a).is_err());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rationals_form_a_field(a in -50i64..50, b in 1i64..30, c in -50i64..50, d in 1i64..30) {
        let q = Rationals;
        let x = q.div(&q.from_int(a), &q.from_int(b)).unwrap();
        let y = q.div(&q.from_int(c), &q.from_int(d)).unwrap();
        check_axioms(&q, &x, &y, &q.add(&x, &q.from_int(3)));
    }

    #[test]
    fn rational_functions_form_a_field(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = RationalFunctions::new(u_ring(2));
        let mut elem = || {
            let num = random_poly(&mut rng, k.ring(), 3, 2, 4);
            let mut den = random_poly(&mut rng, k.ring(), 2, 2, 4);
            if den.is_zero() {
                den = noether::poly::one(k.ring());
            }
            k.fraction(num, den).unwrap()
        };
        let (a, b, c) = (elem(), elem(), elem());
        check_axioms(&k, &a, &b, &c);
    }

    #[test]
    fn residue_field_axioms_and_lift(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = cubic_field();
        let r = f.u_ring().clone();
        let mut elem = || {
            let a = random_poly(&mut rng, &r, 3, 2, 3);
            let b = random_poly(&mut rng, &r, 2, 2, 3);
            f.fraction(&a, &b).unwrap_or_else(|_| f.from_u_poly(&a))
        };
        let (a, b, c) = (elem(), elem(), elem());
        check_axioms(&f, &a, &b, &c);
        for e in [&a, &b, &c] {
            let (num, den) = f.lift(e);
            prop_assert!(den.variables().iter().all(|&i| i >= 2));
            prop_assert_eq!(&f.fraction(&num, &den).unwrap(), e);
        }
    }
}

#[test]
fn inverse_of_u2_on_the_twisted_cubic() {
    let f = cubic_field();
    let r = f.u_ring().clone();
    let u = |i: usize| var(&r, i);
    let inv = f.inv(&f.from_u_poly(&u(1))).unwrap();
    assert_eq!(inv, f.fraction(&u(0), &(&u(2) * &u(3))).unwrap());
    assert_eq!(f.degree(), 3);
    assert!(f.is_zero(&f.from_u_poly(&poly(&r, "u1^2-u2*u3"))));
    let (num, den) = f.lift(&inv);
    assert_eq!(den, &u(2) * &u(3));
    assert_eq!(num, u(0));
}

#[test]
fn elements_in_the_prime_are_not_invertible() {
    let f = cubic_field();
    let r = f.u_ring().clone();
    let g = poly(&r, "u1*u2-u3*u4");
    assert!(f.fraction(&noether::poly::one(&r), &g).is_err());
}


