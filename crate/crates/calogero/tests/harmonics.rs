use calogero::construct::{construct_monic, jack_monic};
use calogero::harmonics::{
    apply_l, decompose_harmonic, dunkl_projection, expected_harmonic_dimension, harmonic_dimension,
    radial_poly,
};
use calogero::scalars::{int, rat, Family, Params, Rational};
use calogero::sympoly::{Partition, Poly, SymPoly};

fn lam(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn grid() -> Vec<Params> {
    let mut out = Vec::new();
    for n in 1..=3 {
        for g0 in [int(0), rat(1, 2), int(1), int(2)] {
            for omega in [int(1), rat(2, 5)] {
                out.push(Params::type_a(n, g0.clone(), omega.clone()).unwrap());
                for g1 in [int(0), rat(1, 2), int(1)] {
                    out.push(Params::type_b(n, g0.clone(), g1, omega.clone()).unwrap());
                }
            }
        }
    }
    out
}

#[test]
fn reconstruction_and_harmonicity() {
    for params in grid() {
        let max = if params.n() == 3 && params.family() == Family::B {
            3
        } else {
            4
        };
        for lambda in Partition::up_to_weight(params.n(), max) {
            let dec = decompose_harmonic(&lambda, &params).unwrap();
            let p = construct_monic(&lambda, &params).unwrap();
            assert_eq!(&dec.reconstruct(), p.poly.poly(), "{params} {lambda}");
            for t in &dec.terms {
                assert!(
                    apply_l(&t.harmonic, &params).unwrap().is_zero(),
                    "{params} {lambda} m={}",
                    t.m
                );
                assert_eq!(t.radial.last(), Some(&int(1)));
                assert_eq!(t.radial.len() as u32, t.m + 1);
            }
            let jack = jack_monic(&lambda, params.g0()).unwrap();
            let top = match params.family() {
                Family::A => jack,
                Family::B => jack.in_squares(),
            };
            assert_eq!(&dec.leading_part(), top.poly(), "{params} {lambda}");
        }
    }
}

#[test]
fn dimension_counts() {
    for params in grid().into_iter().filter(|p| p.omega() == &int(1)) {
        for l in 0..=4 {
            let expected = expected_harmonic_dimension(l, &params);
            assert_eq!(
                harmonic_dimension(l, &params).unwrap(),
                expected,
                "{params} l={l}"
            );
        }
        for lambda in Partition::up_to_weight(params.n(), 3) {
            let dec = decompose_harmonic(&lambda, &params).unwrap();
            let m_max = match params.family() {
                Family::A => lambda.weight() / 2,
                Family::B => lambda.weight(),
            };
            assert!(dec.terms.iter().all(|t| t.m <= m_max));
        }
    }
}

#[test]
fn worked_example() {
    for omega in [int(1), rat(2, 5)] {
        let params = Params::type_a(2, int(1), omega.clone()).unwrap();
        let dec = decompose_harmonic(&lam(&[2, 0]), &params).unwrap();
        assert_eq!(dec.terms.len(), 2);
        let y2 = dec.harmonic(0).unwrap();
        let y2_map = y2.expand_in_msym().unwrap();
        assert_eq!(y2_map.get(&lam(&[2, 0])), Some(&rat(1, 4)));
        assert_eq!(y2_map.get(&lam(&[1, 1])), Some(&int(1)));
        let y0 = dec.harmonic(1).unwrap();
        assert_eq!(y0.poly(), &Poly::constant(2, rat(3, 4)));
        let r1 = &dec.terms[1].radial;
        assert_eq!(r1, &vec![-int(2) / &omega, int(1)]);
        assert_eq!(&dunkl_projection(&lam(&[2, 0]), 0, &params).unwrap(), y2);
        assert_eq!(&dunkl_projection(&lam(&[2, 0]), 1, &params).unwrap(), y0);
    }
}

#[test]
fn trivial_decompositions() {
    let params = Params::type_a(2, int(1), int(1)).unwrap();
    let dec = decompose_harmonic(&lam(&[1, 0]), &params).unwrap();
    assert_eq!(dec.terms.len(), 1);
    assert_eq!(dec.terms[0].harmonic, SymPoly::msym(&lam(&[1, 0]), false));
    let zero = decompose_harmonic(&lam(&[0, 0]), &params).unwrap();
    assert_eq!(zero.terms.len(), 1);
    assert_eq!(zero.terms[0].radial, vec![int(1)]);
    assert_eq!(zero.terms[0].harmonic.poly(), &Poly::one(2));
}

#[test]
fn spherical_operator_examples() {
    let one_var = Params::type_a(1, int(0), int(1)).unwrap();
    let x2 = SymPoly::msym(&lam(&[2]), false);
    assert_eq!(
        apply_l(&x2, &one_var).unwrap().poly(),
        &Poly::constant(1, int(2))
    );
    let c = SymPoly::constant(2, rat(5, 3), false);
    assert!(apply_l(&c, &Params::type_a(2, int(1), int(1)).unwrap())
        .unwrap()
        .is_zero());
}

#[test]
fn radial_examples() {
    for g0 in [int(0), rat(1, 2), int(3)] {
        for omega in [int(1), rat(2, 5)] {
            let params = Params::type_a(2, g0.clone(), omega.clone()).unwrap();
            let expected: Vec<Rational> = vec![-(int(1) + &g0) / &omega, int(1)];
            assert_eq!(radial_poly(1, 0, &params), expected);
            assert_eq!(radial_poly(0, 3, &params), vec![int(1)]);
        }
    }
    let one = Params::type_a(1, int(0), rat(2, 5)).unwrap();
    assert_eq!(radial_poly(1, 0, &one), vec![rat(-5, 4), int(1)]);
}
