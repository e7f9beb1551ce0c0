use calogero::construct::{
    c_coeff, construct_monic, gram_schmidt_oracle, jack_monic, one_var_closed_form, Basis,
    Normalization,
};
use calogero::scalars::{int, rat, Family, Params, Rational};
use calogero::sympoly::{GaussianFunctional, Partition, SymPoly};
use num_traits::{One, Zero};

fn lam(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn integer_grid(omegas: &[Rational]) -> Vec<Params> {
    let mut out = Vec::new();
    for n in 1..=3 {
        for g0 in 0..=2 {
            out.push(Params::type_a(n, int(g0), omegas[0].clone()).unwrap());
            for g1 in 0..=2 {
                for w in omegas {
                    out.push(Params::type_b(n, int(g0), int(g1), w.clone()).unwrap());
                }
            }
            if omegas.len() > 1 {
                out.push(Params::type_a(n, int(g0), omegas[1].clone()).unwrap());
            }
        }
    }
    out
}

#[test]
fn matches_gram_schmidt() {
    for params in integer_grid(&[int(1), rat(1, 3)]) {
        let max = match (params.family(), params.n()) {
            (_, 1) => 4,
            (Family::A, 2) => 4,
            (Family::B, 2) => 3,
            _ => 2,
        };
        for lambda in Partition::up_to_weight(params.n(), max) {
            let ours = construct_monic(&lambda, &params).unwrap();
            let oracle = gram_schmidt_oracle(&lambda, &params).unwrap();
            assert_eq!(ours.poly, oracle.poly, "{params} {lambda}");
        }
    }
}

#[test]
fn one_variable_closed_forms() {
    for params in [
        Params::type_a(1, int(0), int(1)).unwrap(),
        Params::type_a(1, int(0), rat(2, 5)).unwrap(),
        Params::type_b(1, int(0), int(0), int(1)).unwrap(),
        Params::type_b(1, int(0), rat(1, 2), rat(2, 5)).unwrap(),
        Params::type_b(1, int(0), rat(3, 2), int(1)).unwrap(),
    ] {
        for l in 0..=8 {
            let ours = construct_monic(&lam(&[l]), &params).unwrap();
            assert_eq!(
                ours.poly,
                one_var_closed_form(l, &params).unwrap(),
                "{params} {l}"
            );
        }
    }
}

#[test]
fn hermite_examples() {
    let p = |v: &[u32], g0: Rational| {
        construct_monic(&lam(v), &Params::type_a(v.len(), g0, int(1)).unwrap()).unwrap()
    };
    // H₂/4 = x² − 1/2, H₃/8 = x³ − 3x/2
    let h2 = p(&[2], int(0));
    assert_eq!(h2.poly.eval(&[int(0)]), rat(-1, 2));
    assert_eq!(h2.poly.eval(&[int(1)]), rat(1, 2));
    let h3 = p(&[3], int(0));
    assert_eq!(h3.poly.eval(&[int(1)]), rat(-1, 2));
    // one-particle excitation of the two-body system is x₁ + x₂
    let p10 = p(&[1, 0], int(1));
    assert_eq!(p10.poly.eval(&[int(2), int(3)]), int(5));
}

#[test]
fn orthogonal_across_incomparable_pairs() {
    for params in [
        Params::type_a(3, int(1), int(1)).unwrap(),
        Params::type_b(3, int(1), int(1), rat(2, 5)).unwrap(),
    ] {
        let functional = GaussianFunctional::new(&params).unwrap();
        let basis = Basis::new(&params);
        let a = basis.monic(&lam(&[3, 0, 0])).unwrap();
        let b = basis.monic(&lam(&[2, 2, 0])).unwrap();
        assert!(functional.inner(&a.poly, &b.poly).is_zero());
        assert!(!functional.inner(&a.poly, &a.poly).is_zero());
    }
}

#[test]
fn triangular_in_monomials() {
    for params in [
        Params::type_a(3, rat(1, 2), rat(2, 5)).unwrap(),
        Params::type_b(3, rat(3, 2), rat(1, 2), int(1)).unwrap(),
        Params::type_b(2, int(0), int(0), int(1)).unwrap(),
    ] {
        for lambda in Partition::up_to_weight(params.n(), 4) {
            let p = construct_monic(&lambda, &params).unwrap();
            let expansion = p.poly.expand_in_msym().unwrap();
            assert_eq!(expansion.get(&lambda), Some(&int(1)));
            for mu in expansion.keys() {
                assert!(
                    mu.dominance_leq(&lambda).unwrap(),
                    "{params} {lambda}: {mu}"
                );
            }
        }
    }
}

#[test]
fn top_part_is_jack() {
    for g0 in [int(0), rat(1, 2), int(1), int(3)] {
        for n in 2..=3 {
            for lambda in Partition::up_to_weight(n, 4) {
                let w = lambda.weight();
                let jack = jack_monic(&lambda, &g0).unwrap();
                let a =
                    construct_monic(&lambda, &Params::type_a(n, g0.clone(), rat(2, 5)).unwrap())
                        .unwrap();
                assert_eq!(
                    a.poly.homogeneous_part(w).poly(),
                    jack.poly(),
                    "A {lambda} g0={g0}"
                );
                let b = construct_monic(
                    &lambda,
                    &Params::type_b(n, g0.clone(), rat(1, 2), int(1)).unwrap(),
                )
                .unwrap();
                assert_eq!(
                    b.poly.homogeneous_part(2 * w).poly(),
                    jack.in_squares().poly(),
                    "B {lambda} g0={g0}"
                );
            }
        }
    }
}

#[test]
fn jack_two_variables() {
    // J_(1,1) = m_(1,1); J_(2,0) = m_(2,0) + 2g₀/(1+g₀) m_(1,1)
    let g0 = rat(1, 2);
    let j = jack_monic(&lam(&[2, 0]), &g0)
        .unwrap()
        .expand_in_msym()
        .unwrap();
    assert_eq!(j.get(&lam(&[1, 1])), Some(&rat(2, 3)));
    assert_eq!(
        jack_monic(&lam(&[1, 1]), &g0).unwrap().poly(),
        SymPoly::msym(&lam(&[1, 1]), false).poly()
    );
}

#[test]
fn normalizations() {
    for family in [Family::A, Family::B] {
        for g0 in [int(0), rat(1, 2), int(2)] {
            for n in 1..=3 {
                let g1 = if family == Family::B {
                    rat(3, 2)
                } else {
                    int(0)
                };
                let params = Params::new(family, n, g0.clone(), g1, rat(2, 5)).unwrap();
                let basis = Basis::new(&params);
                for lambda in Partition::up_to_weight(n, 3) {
                    let big = basis.get(&lambda, Normalization::Pieri).unwrap();
                    let value = match family {
                        Family::B => big.poly.eval(&vec![Rational::zero(); n]),
                        Family::A => {
                            let c = c_coeff(&lambda, &params).unwrap();
                            assert_eq!(big.poly, basis.monic(&lambda).unwrap().poly.scale(&c));
                            big.poly
                                .homogeneous_part(lambda.weight())
                                .eval(&vec![Rational::one(); n])
                        }
                    };
                    assert!(value.is_one(), "{params} {lambda}: {value}");
                }
            }
        }
    }
}

#[test]
fn invalid_inputs() {
    let params = Params::type_a(2, int(1), int(1)).unwrap();
    assert!(construct_monic(&lam(&[1, 0, 0]), &params).is_err());
    assert!(Params::type_a(2, int(-1), int(1)).is_err());
    assert!(Params::type_b(2, int(1), int(0), int(0)).is_err());
    assert!(Partition::new(vec![1, 2]).is_err());
}

#[test]
fn json_round_trip() {
    let params = Params::type_b(2, rat(1, 2), int(1), rat(2, 5)).unwrap();
    let p = construct_monic(&lam(&[2, 1]), &params).unwrap();
    let json = p.to_json();
    assert_eq!(json.poly.to_sympoly().unwrap(), p.poly);
    let text = serde_json::to_value(&json).unwrap();
    assert_eq!(text["schemaVersion"], 1);
    assert_eq!(text["g0"], "1/2");
    assert_eq!(text["even"], true);
}
