use std::collections::BTreeMap;

use calogero::scalars::{int, rat, Family, Params, Rational};
use calogero::sympoly::{gram_inner, DividedDiff, GaussianFunctional, Partition, Poly, SymPoly};
use proptest::prelude::*;

fn coefficient() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(p, q)| rat(p, q))
}

/// Random Σ c_μ m_μ over partitions of weight ≤ `max_weight`.
fn random_sym(n: usize, max_weight: u32, even: bool) -> impl Strategy<Value = SymPoly> {
    let basis = Partition::up_to_weight(n, max_weight);
    let len = basis.len();
    prop::collection::vec(coefficient(), len).prop_map(move |cs| {
        let coeffs: BTreeMap<Partition, Rational> = basis.iter().cloned().zip(cs).collect();
        SymPoly::from_msym(n, &coeffs, even)
    })
}

#[test]
fn msym_round_trip() {
    for n in 1..=4 {
        for lambda in Partition::up_to_weight(n, 6) {
            for even in [false, true] {
                let expansion = SymPoly::msym(&lambda, even).expand_in_msym().unwrap();
                assert_eq!(expansion.len(), 1, "{lambda}");
                assert_eq!(expansion.get(&lambda), Some(&int(1)), "{lambda}");
            }
        }
    }
}

#[test]
fn dominance_is_a_partial_order() {
    for n in 1..=4 {
        let all = Partition::up_to_weight(n, 5);
        let leq = |a: &Partition, b: &Partition| a.dominance_leq(b).unwrap();
        for a in &all {
            assert!(leq(a, a));
            for b in &all {
                if leq(a, b) && leq(b, a) {
                    assert_eq!(a, b);
                }
                if !leq(a, b) {
                    continue;
                }
                for c in &all {
                    if leq(b, c) {
                        assert!(leq(a, c), "{a} ≤ {b} ≤ {c}");
                    }
                }
            }
        }
    }
}

#[test]
fn incomparable_pair() {
    let a = Partition::new(vec![3, 0, 0]).unwrap();
    let b = Partition::new(vec![2, 2, 0]).unwrap();
    assert!(!a.dominance_leq(&b).unwrap() && !b.dominance_leq(&a).unwrap());
    let c = Partition::new(vec![2, 2, 2]).unwrap();
    let d = Partition::new(vec![4, 0, 0]).unwrap();
    assert!(!c.dominance_leq(&d).unwrap() && !d.dominance_leq(&c).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn divided_differences_of_symmetric_input(p in (2usize..=3).prop_flat_map(|n| random_sym(n, 4, false))) {
        let n = p.n();
        for j in 0..n {
            for k in j + 1..n {
                prop_assert!(DividedDiff::MinusPair(j, k).apply(p.poly()).is_ok());
            }
        }
    }

    #[test]
    fn divided_differences_of_even_input(p in (1usize..=3).prop_flat_map(|n| random_sym(n, 3, true))) {
        let n = p.n();
        for j in 0..n {
            prop_assert!(DividedDiff::InvX(j).apply(p.poly()).is_ok());
            for k in j + 1..n {
                prop_assert!(DividedDiff::MinusPair(j, k).apply(p.poly()).is_ok());
                prop_assert!(DividedDiff::PlusPair(j, k).apply(p.poly()).is_ok());
            }
        }
    }

    #[test]
    fn gram_is_symmetric_and_bilinear(
        (f, g, h) in random_sym(2, 3, false).prop_flat_map(|f| (Just(f), random_sym(2, 3, false), random_sym(2, 2, false))),
        a in coefficient(),
        g0 in 0i64..=2,
    ) {
        let params = Params::type_a(2, int(g0), rat(2, 5)).unwrap();
        let ip = |x: &SymPoly, y: &SymPoly| gram_inner(x, y, &params).unwrap();
        prop_assert_eq!(ip(&f, &g), ip(&g, &f));
        let combo = f.scale(&a).add(&h);
        prop_assert_eq!(ip(&combo, &g), &ip(&f, &g).scale(&a) + &ip(&h, &g));
    }

    #[test]
    fn gram_is_positive(f in random_sym(2, 3, true), g0 in 0i64..=1, g1 in 0i64..=1) {
        prop_assume!(!f.is_zero());
        let params = Params::type_b(2, int(g0), int(g1), int(1)).unwrap();
        let v = gram_inner(&f, &f, &params).unwrap();
        prop_assert!(v.to_f64() > 0.0);
        let rational = v.terms().map(|(_, _, q)| q.clone()).last().unwrap();
        prop_assert!(rational > int(0));
    }
}

#[test]
fn odd_moments_vanish() {
    for family in [Family::A, Family::B] {
        for (g0, g1) in [(0, 0), (1, 0), (1, 1), (2, 1)] {
            let g1 = if family == Family::A { 0 } else { g1 };
            let params = Params::new(family, 2, int(g0), int(g1), rat(2, 5)).unwrap();
            let functional = GaussianFunctional::new(&params).unwrap();
            for a in 0..5u32 {
                for b in 0..5u32 {
                    let m = Poly::monomial(vec![a, b], int(1));
                    let odd = match family {
                        Family::A => (a + b) % 2 == 1,
                        Family::B => a % 2 == 1 || b % 2 == 1,
                    };
                    if odd {
                        assert!(functional.moment(&m).is_zero(), "{family} x^{a}y^{b}");
                    }
                }
            }
        }
    }
}

#[test]
fn one_variable_moments() {
    // ∫x^{2k}e^{−ωx²} = Γ(k+½)/ω^{k+½}
    let w = rat(2, 5);
    let params = Params::type_a(1, int(0), w.clone()).unwrap();
    let functional = GaussianFunctional::new(&params).unwrap();
    for k in 0..5u32 {
        let got = functional.moment(&Poly::monomial(vec![2 * k], int(1)));
        let mut expected = (std::f64::consts::PI / 0.4).sqrt();
        for j in 0..k {
            expected *= (j as f64 + 0.5) / 0.4;
        }
        assert!((got.to_f64() / expected - 1.0).abs() < 1e-14, "k={k}");
    }
}

#[test]
fn asymmetric_input_rejected() {
    assert!(SymPoly::from_poly(Poly::var(2, 0), false).is_err());
    let p = &Poly::var(2, 0) + &Poly::var(2, 1);
    assert!(SymPoly::from_poly(p.clone(), false).is_ok());
    assert!(SymPoly::from_poly(p, true).is_err());
}
