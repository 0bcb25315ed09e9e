mod common;

use common::*;
use divisor_lab::divisorial::{divisorial, divisorial_via_ext};
use divisor_lab::semigroup::{FracIdeal, NumericalSemigroup};
use proptest::prelude::*;

fn monomial_strategy(n: usize, max: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..=max, n).prop_filter("nonconstant", |e| e.iter().any(|&x| x > 0))
}

fn ideal_text(vars: &[&str], gens: &[Vec<u32>]) -> String {
    gens.iter().map(|e| monomial_text(vars, e)).collect::<Vec<_>>().join(", ")
}

fn poly_text(vars: &[&str], terms: &[(i32, Vec<u32>)]) -> String {
    let parts: Vec<String> = terms
        .iter()
        .map(|(c, e)| format!("({c})*{}", monomial_text(vars, e)))
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn terms_strategy() -> impl Strategy<Value = Vec<(i32, Vec<u32>)>> {
    prop::collection::vec((-5i32..=5, prop::collection::vec(0u32..=3, 3)), 0..5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn polynomial_ring_laws(a in terms_strategy(), b in terms_strategy(), c in terms_strategy()) {
        let r = qq(&VARS);
        let (f, g, h) = (poly(&r, &poly_text(&VARS, &a)), poly(&r, &poly_text(&VARS, &b)), poly(&r, &poly_text(&VARS, &c)));
        prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(poly(&r, &f.to_string()), f);
    }

    #[test]
    fn reduced_basis_ignores_generator_order(gens in prop::collection::vec(monomial_strategy(3, 3), 1..4), extra in terms_strategy()) {
        let r = qq(&VARS);
        let mut texts: Vec<String> = gens.iter().map(|e| monomial_text(&VARS, e)).collect();
        let f = poly_text(&VARS, &extra);
        if f != "0" {
            texts.push(f);
        }
        let a = ideal(&r, &texts.join(", "));
        texts.reverse();
        let b = ideal(&r, &texts.join(", "));
        prop_assert_eq!(a.to_string(), b.to_string());
        prop_assert!(same(&a, &b));
    }

    #[test]
    fn divisorial_is_a_closure_in_two_variables(gens in prop::collection::vec(monomial_strategy(2, 4), 1..4)) {
        let r = qq(&["x", "y"]);
        let i = ideal(&r, &ideal_text(&["x", "y"], &gens));
        let d = divisorial(&i).unwrap().d;
        prop_assert!(i.is_subset(&d).unwrap());
        for g in d.gens() {
            prop_assert!(i.radical_contains(g).unwrap());
        }
        let dd = divisorial(&d).unwrap().d;
        prop_assert!(same(&d, &dd));
        let ext = divisorial_via_ext(&i).unwrap().d;
        prop_assert!(same(&d, &ext));
    }

    #[test]
    fn divisorial_routes_agree_in_three_variables(gens in prop::collection::vec(monomial_strategy(3, 2), 1..4)) {
        let r = qq(&VARS);
        let i = ideal(&r, &ideal_text(&VARS, &gens));
        let d = divisorial(&i).unwrap().d;
        let ext = divisorial_via_ext(&i).unwrap().d;
        prop_assert!(same(&d, &ext), "colon {} vs ext {}", d, ext);
    }

    #[test]
    fn saturation_contains_the_ideal(gens in prop::collection::vec(monomial_strategy(2, 4), 1..4)) {
        let r = qq(&["x", "y"]);
        let i = ideal(&r, &ideal_text(&["x", "y"], &gens));
        let (s, _) = i.saturate(&r.maximal_ideal()).unwrap();
        prop_assert!(i.is_subset(&s).unwrap());
        let (s2, k) = s.saturate(&r.maximal_ideal()).unwrap();
        prop_assert!(same(&s, &s2));
        prop_assert_eq!(k, 0);
    }
}

fn semigroup_strategy() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(2u64..=11, 2..4).prop_filter("coprime", |g| g.iter().fold(0, |a, &b| num_integer::gcd(a, b)) == 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn semigroup_divisorial_sandwich(gens in semigroup_strategy(), picks in prop::collection::vec(1i64..40, 1..4)) {
        let s = NumericalSemigroup::new(&gens).unwrap();
        let members: Vec<i64> = picks.into_iter().filter(|&v| s.contains(v)).collect();
        prop_assume!(!members.is_empty());
        let i = FracIdeal::new(&s, &members).unwrap();
        let d = i.divisorial();
        let closure = i.integral_closure().unwrap();
        prop_assert!(i.is_subset(&d).unwrap());
        prop_assert!(d.is_subset(&closure).unwrap());
        prop_assert_eq!(d.divisorial().to_string(), d.to_string());
        prop_assert_eq!(i.frobenius_closure(2, 8).unwrap().to_string(), closure.to_string());
        prop_assert!(i.dual().dual().is_subset(&d).unwrap() && d.is_subset(&i.dual().dual()).unwrap());
        let cond = FracIdeal::conductor_ideal(&s);
        prop_assert!(cond.is_subset(&i.trace().divisorial()).unwrap());
    }

    #[test]
    fn semigroup_dual_reverses_inclusion(gens in semigroup_strategy(), a in 1i64..30, b in 1i64..30) {
        let s = NumericalSemigroup::new(&gens).unwrap();
        prop_assume!(s.contains(a) && s.contains(b));
        let small = FracIdeal::new(&s, &[a, b]).unwrap().product(&FracIdeal::maximal(&s)).unwrap();
        let big = FracIdeal::new(&s, &[a, b]).unwrap();
        prop_assert!(small.is_subset(&big).unwrap());
        prop_assert!(big.dual().is_subset(&small.dual()).unwrap());
    }
}
