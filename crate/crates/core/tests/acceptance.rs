//! One line per acceptance criterion. Run with
//! `cargo test -p noether --test acceptance -- --nocapture` to see the report.

mod common;

use common::checks::{
    duality_round_trips, order_bound, sample_is_annihilated, spair_residuals, symbolic_power_multiplicities,
    power_ideal, zn_agrees_with_join, Check,
};
use common::*;
use noether::field::{Field, Rational, Rationals};
use noether::join::{join, join_membership};
use noether::poly::{var, Monomial};
use noether::primary::{
    gamma_image, ideal_from_operators, noetherian_operators, operators_to_inverse_system, solution_family,
    verify_noetherian, DEFAULT_MAX_DEGREE,
};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

fn within(start: Instant, budget: Duration) -> Check {
    let t = start.elapsed();
    if t > budget {
        return Err(format!("took {t:.2?}, budget {budget:?}"));
    }
    Ok(())
}

fn ensure(ok: bool, what: &str) -> Check {
    if ok {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

fn running_example_forward() -> Check {
    let start = Instant::now();
    let r = ring(4);
    let q = ideal(&r, TWISTED_CUBIC_Q);
    let s = scene(&ideal(&r, TWISTED_CUBIC));
    let rep = noetherian_operators(&q, s.clone(), DEFAULT_MAX_DEGREE).map_err(|e| e.to_string())?;
    ensure(rep.operators.len() == 3, "expected 3 operators")?;
    let want = operators_to_inverse_system(&ops(&r, &TWISTED_CUBIC_OPS), &s);
    ensure(rep.inverse_system.same_span(&want), "span differs from {1, dx1, dx1^2-2*x2*dx2}")?;
    order_bound(&q, &rep)?;
    within(start, Duration::from_secs(5))
}

fn running_example_round_trips() -> Check {
    let start = Instant::now();
    let r = ring(4);
    let q = ideal(&r, TWISTED_CUBIC_Q);
    let s = scene(&ideal(&r, TWISTED_CUBIC));
    let l = ops(&r, &TWISTED_CUBIC_OPS);
    let back = ideal_from_operators(&l, &s, DEFAULT_MAX_DEGREE).map_err(|e| e.to_string())?;
    ensure(back.groebner().elems() == q.groebner().elems(), "backward result is not Q")?;
    let fwd = noetherian_operators(&back, s.clone(), DEFAULT_MAX_DEGREE).map_err(|e| e.to_string())?;
    ensure(
        fwd.inverse_system.same_span(&operators_to_inverse_system(&l, &s)),
        "forward after backward changes the operators",
    )?;
    let again = ideal_from_operators(&fwd.operators, &s, DEFAULT_MAX_DEGREE).map_err(|e| e.to_string())?;
    ensure(again.equals(&q), "backward after forward changes Q")?;

    let q83 = ideal(&r, LINE_Q);
    let s83 = scene(&ideal(&r, LINE_P));
    let rep = noetherian_operators(&q83, s83.clone(), DEFAULT_MAX_DEGREE).map_err(|e| e.to_string())?;
    let o5 = ideal_from_operators(&rep.operators, &s83, DEFAULT_MAX_DEGREE).map_err(|e| e.to_string())?;
    ensure(o5.equals(&ideal(&r, LINE_BACK)), "second fixture: backward output differs")?;
    ensure(o5.equals(&q83), "second fixture: round trip is not the identity")?;
    let fwd = noetherian_operators(&o5, s83.clone(), DEFAULT_MAX_DEGREE).map_err(|e| e.to_string())?;
    ensure(fwd.inverse_system.same_span(&rep.inverse_system), "second fixture: operators change")?;
    within(start, Duration::from_secs(10))
}

fn second_example_forward() -> Check {
    let start = Instant::now();
    let r = ring(4);
    let q = ideal(&r, LINE_Q);
    let s = scene(&ideal(&r, LINE_P));
    let rep = noetherian_operators(&q, s.clone(), DEFAULT_MAX_DEGREE).map_err(|e| e.to_string())?;
    ensure(rep.operators.len() == 4, "expected 4 operators")?;
    let want = operators_to_inverse_system(&ops(&r, &["1", "dx2", "dx3", LINE_OP]), &s);
    ensure(rep.inverse_system.same_span(&want), "span differs from the expected four operators")?;
    let special = operators_to_inverse_system(&ops(&r, &[LINE_OP]), &s);
    ensure(rep.inverse_system.contains(&special.basis()[0]), "second-order operator missing")?;
    order_bound(&q, &rep)?;
    within(start, Duration::from_secs(5))
}

fn power_table() -> Check {
    let start = Instant::now();
    let counts = [1, 3, 7, 12, 19, 27];
    let mut desk = Duration::ZERO;
    for (k, &want) in (1..=6u32).zip(&counts) {
        let (q, p) = power_ideal(k);
        let rep = noetherian_operators(&q, scene(&p), DEFAULT_MAX_DEGREE).map_err(|e| e.to_string())?;
        ensure(rep.operators.len() == want, &format!("k = {k}: {} operators, expected {want}", rep.operators.len()))?;
        order_bound(&q, &rep)?;
        if k == 4 {
            desk = start.elapsed();
        }
    }
    ensure(desk <= Duration::from_secs(120), &format!("k <= 4 took {desk:.2?}"))
}

fn coordinate_squares_join() -> Check {
    let start = Instant::now();
    let r = ring(4);
    let p = ideal(&r, TWISTED_CUBIC);
    let m = ideal(&r, "x1^2, x2^2, x3^2, x4^2");
    let q = join(&p, &m).map_err(|e| e.to_string())?;
    let octic = poly(&r, "x1^8-4*x1^6*x2*x3+6*x1^4*x2^2*x3^2-4*x1^2*x2^3*x3^3+x2^4*x3^4");
    ensure(q.contains(&octic), "octic not in the join")?;
    ensure(join_membership(&octic, &p, &m).map_err(|e| e.to_string())?, "octic fails the operator test")?;
    let s = scene(&p);
    let g = gamma_image(&q, &s, DEFAULT_MAX_DEGREE).map_err(|e| e.to_string())?;
    ensure(g.multiplicity == 11, &format!("multiplicity {}", g.multiplicity))?;
    let f = s.field();
    let u = |i: usize| f.from_u_poly(&var(s.u_ring(), s.x_to_u()[i].unwrap()));
    let (y, z) = (s.y_ring(), s.z_ring());
    let ym = |a, b, c| noether::poly::monomial(y, Monomial::new([a, b]), c);
    let zm = |a, b, c| noether::poly::monomial(z, Monomial::new([a, b]), c);
    let k = |n: i64| f.from_int(n);
    let i_gens = [
        ym(4, 0, f.one()),
        &ym(3, 1, u(1)) - &ym(1, 3, u(2)),
        &ym(2, 2, f.mul(&k(3), &u(0))) - &ym(1, 3, f.mul(&k(5), &u(2))),
        ym(0, 4, f.one()),
    ];
    let i = noether::groebner::GroebnerBasis::compute(y, &i_gens);
    ensure(g.gb.elems() == i.elems(), "step-one ideal differs")?;
    let b = &(&zm(3, 1, f.mul(&k(2), &f.mul(&u(0), &u(2)))) + &zm(2, 2, f.mul(&k(5), &f.mul(&u(1), &u(2)))))
        + &zm(1, 3, f.mul(&k(2), &f.mul(&u(0), &u(1))));
    let v = noether::inverse::dual_basis(&g.gb, z).map_err(|e| e.to_string())?;
    ensure(v.contains(&b), "special dual element missing")?;
    within(start, Duration::from_secs(60))
}

fn palamodov_example() -> Check {
    let r = ring(3);
    let q = ideal(&r, PALAMODOV_Q);
    let s = scene(&ideal(&r, PALAMODOV_P));
    let rep = noetherian_operators(&q, s.clone(), DEFAULT_MAX_DEGREE).map_err(|e| e.to_string())?;
    let pair = ops(&r, &["1", "x3*dx1+dx2"]);
    ensure(
        rep.inverse_system.same_span(&operators_to_inverse_system(&pair, &s)),
        "span differs from {1, x3*dx1+dx2}",
    )?;
    ensure(verify_noetherian(&pair, &s).map_err(|e| e.to_string())?, "verification rejects the pair")?;
    ensure(
        !verify_noetherian(&ops(&r, &["dx1", "dx2"]), &s).map_err(|e| e.to_string())?,
        "verification accepts {dx1, dx2}",
    )?;
    order_bound(&q, &rep)
}

fn solution_sampling() -> Check {
    let r = ring(4);
    let q = ideal(&r, TWISTED_CUBIC_Q);
    let fam = solution_family(&q, scene(&ideal(&r, TWISTED_CUBIC)), DEFAULT_MAX_DEGREE).map_err(|e| e.to_string())?;
    let pt: Vec<Rational> = [12, 18, 8, 27].iter().map(|&c| Rationals.from_int(c)).collect();
    let text = fam.sample(&pt, 3).map_err(|e| e.to_string())?;
    ensure(text == "(z1^2-36*z2)*exp(12*z1+18*z2+8*z3+27*z4)", &format!("sample is {text}"))?;
    sample_is_annihilated(&text, &q, &fam.z_ring())
}

fn property_suites() -> Check {
    spair_residuals(2024, 25)?;
    duality_round_trips(7)?;
    symbolic_power_multiplicities()?;
    zn_agrees_with_join(11, 100)?;
    let fixtures = [
        (ring(4), TWISTED_CUBIC_Q, TWISTED_CUBIC),
        (ring(4), LINE_Q, LINE_P),
        (ring(3), PALAMODOV_Q, PALAMODOV_P),
    ];
    for (r, q, p) in fixtures {
        let q = ideal(&r, q);
        let rep = noetherian_operators(&q, scene(&ideal(&r, p)), DEFAULT_MAX_DEGREE).map_err(|e| e.to_string())?;
        order_bound(&q, &rep)?;
    }
    Ok(())
}

fn run(f: fn() -> Check) -> (Check, Duration) {
    let start = Instant::now();
    let out = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {msg}"))
    });
    (out, start.elapsed())
}

#[test]
fn acceptance() {
    let criteria: [(&str, Option<fn() -> Check>); 9] = [
        ("running example forward", Some(running_example_forward)),
        ("running example backward and round trips", Some(running_example_round_trips)),
        ("second-order operator example forward", Some(second_example_forward)),
        ("power table operator counts (k <= 6)", Some(power_table)),
        ("join with coordinate squares", Some(coordinate_squares_join)),
        ("Palamodov example and verification", Some(palamodov_example)),
        ("solution sampling", Some(solution_sampling)),
        ("property suites", Some(property_suites)),
        ("analytic completeness of the integral representation", None),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let n = i + 1;
        match check {
            None => println!("criterion {n}: SKIP {name} (out of scope: analytic statement, not checkable symbolically)"),
            Some(f) => match run(*f) {
                (Ok(()), t) => println!("criterion {n}: PASS {name} ({t:.2?})"),
                (Err(e), t) => {
                    println!("criterion {n}: FAIL {name} ({t:.2?}): {e}");
                    failed.push(n);
                }
            },
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
