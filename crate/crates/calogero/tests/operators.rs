use calogero::construct::{construct_monic, Basis};
use calogero::operators::{
    apply_d1, difference_eigenvalue, difference_eval, difference_r1_direct, difference_series,
    difference_series_truncated, eigenvalue_e, ground_energy, sample_point, Wavefunction,
};
use calogero::scalars::{int, rat, Family, Params, Rational};
use calogero::sympoly::{GaussianFunctional, Partition, SymPoly};
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn lam(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn sample_params() -> Vec<Params> {
    let mut out = Vec::new();
    for n in 1..=3 {
        for g0 in [int(0), rat(1, 2), int(1), rat(3, 2), int(2)] {
            for omega in [int(1), rat(2, 5)] {
                out.push(Params::type_a(n, g0.clone(), omega.clone()).unwrap());
                for g1 in [int(0), rat(1, 2), int(1), rat(3, 2)] {
                    out.push(Params::type_b(n, g0.clone(), g1, omega.clone()).unwrap());
                }
            }
        }
    }
    out
}

#[test]
fn eigen_equation() {
    for params in sample_params() {
        let max = if params.n() == 3 { 3 } else { 4 };
        let basis = Basis::new(&params);
        for lambda in Partition::up_to_weight(params.n(), max) {
            let p = basis.monic(&lambda).unwrap();
            let e = eigenvalue_e(1, &lambda, &params).unwrap();
            assert_eq!(
                apply_d1(&p.poly, &params).unwrap(),
                p.poly.scale(&e),
                "{params} {lambda}"
            );
        }
    }
}

#[test]
fn one_variable_eigenvalues() {
    // Hermite: 2ωλ; Laguerre in x²: 4ωλ
    let a = Params::type_a(1, int(0), rat(2, 5)).unwrap();
    let b = Params::type_b(1, int(0), rat(1, 2), rat(2, 5)).unwrap();
    assert_eq!(eigenvalue_e(1, &lam(&[3]), &a).unwrap(), rat(12, 5));
    assert_eq!(eigenvalue_e(1, &lam(&[3]), &b).unwrap(), rat(24, 5));
}

#[test]
fn d1_is_symmetric() {
    for family in [Family::A, Family::B] {
        for n in 1..=3usize {
            for g0 in 0..=1 {
                let g1 = if family == Family::B { 1 } else { 0 };
                let params = Params::new(family, n, int(g0), int(g1), rat(2, 5)).unwrap();
                let functional = GaussianFunctional::new(&params).unwrap();
                let monomials: Vec<SymPoly> = Partition::up_to_weight(n, 3)
                    .iter()
                    .map(|l| SymPoly::msym(l, params.is_even()))
                    .collect();
                let images: Vec<SymPoly> = monomials
                    .iter()
                    .map(|m| apply_d1(m, &params).unwrap())
                    .collect();
                for i in 0..monomials.len() {
                    for j in i + 1..monomials.len() {
                        let left = functional.inner(&images[i], &monomials[j]);
                        let right = functional.inner(&monomials[i], &images[j]);
                        assert_eq!(left, right, "{params}");
                    }
                }
            }
        }
    }
}

/// H₁ψ₀/ψ₀ computed from ∂ ln ψ₀ in exact arithmetic.
fn ground_state_energy_at(x: &[Rational], params: &Params) -> Rational {
    let n = x.len();
    let (w, g0, g1) = (params.omega(), params.g0(), params.g1());
    let b = params.family() == Family::B;
    let mut total = int(0);
    for j in 0..n {
        let mut first = -(w * &x[j]);
        let mut second = -w.clone();
        for k in (0..n).filter(|&k| k != j) {
            let d = &x[j] - &x[k];
            first += g0 / &d;
            second -= g0 / (&d * &d);
            if b {
                let s = &x[j] + &x[k];
                first += g0 / &s;
                second -= g0 / (&s * &s);
            }
        }
        if b {
            first += g1 / &x[j];
            second -= g1 / (&x[j] * &x[j]);
        }
        total -= second + &first * &first;
        total += w * w * &x[j] * &x[j];
        if b {
            total += g1 * (g1 - int(1)) / (&x[j] * &x[j]);
        }
        for k in j + 1..n {
            let pair = g0 * (g0 - int(1)) * int(2);
            let d = &x[j] - &x[k];
            total += &pair / (&d * &d);
            if b {
                let s = &x[j] + &x[k];
                total += &pair / (&s * &s);
            }
        }
    }
    total
}

#[test]
fn ground_energy_exact() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for params in sample_params() {
        let e0 = ground_energy(&params);
        for _ in 0..3 {
            let x = sample_point(&mut rng, &params);
            assert_eq!(ground_state_energy_at(&x, &params), e0, "{params} at {x:?}");
        }
    }
    assert_eq!(
        ground_energy(&Params::type_a(2, int(1), int(1)).unwrap()),
        int(4)
    );
    assert_eq!(
        ground_energy(&Params::type_b(1, int(0), int(1), int(1)).unwrap()),
        int(3)
    );
}

#[test]
fn hamiltonian_residuals() {
    for params in sample_params().into_iter().filter(|p| p.n() <= 2) {
        for lambda in Partition::up_to_weight(params.n(), 2) {
            let wave = Wavefunction::new(&lambda, &params).unwrap();
            for x in wave.sample_points(params.n(), 10, 3, 0.1) {
                let res = wave.residual(&x, 1e-3).unwrap();
                assert!(res <= 1e-5, "{params} {lambda} at {x:?}: {res}");
            }
        }
    }
}

#[test]
fn r1_operator_matches_two_term_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for params in [
        Params::type_a(2, rat(1, 2), int(1)).unwrap(),
        Params::type_a(3, int(2), rat(2, 5)).unwrap(),
        Params::type_b(2, int(1), rat(3, 2), int(1)).unwrap(),
        Params::type_b(3, rat(1, 2), int(0), rat(2, 5)).unwrap(),
    ] {
        for lambda in [
            Partition::zero(params.n()),
            Partition::parse("2,1", params.n()).unwrap(),
        ] {
            let p = construct_monic(&lambda, &params).unwrap();
            let x = sample_point(&mut rng, &params);
            for s in [rat(1, 3), rat(-2, 7), int(2)] {
                let general = difference_eval(&p.poly, 1, &s, &x, &params);
                let direct = difference_r1_direct(&p.poly, &s, &x, &params);
                match (general, direct) {
                    (Ok(a), Ok(b)) => assert_eq!(a, b, "{params} {lambda} s={s}"),
                    (a, b) => assert_eq!(a.is_err(), b.is_err()),
                }
            }
        }
    }
}

#[test]
fn series_two_ways() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for params in [
        Params::type_a(2, rat(3, 2), int(1)).unwrap(),
        Params::type_b(2, int(1), rat(1, 2), rat(2, 5)).unwrap(),
    ] {
        let p = construct_monic(&lam(&[2, 1]), &params).unwrap();
        let x = sample_point(&mut rng, &params);
        for r in 1..=2 {
            let a = difference_series(&p.poly, r, &x, &params).unwrap();
            let b = difference_series_truncated(&p.poly, r, &x, &params, 2 * r).unwrap();
            assert_eq!(a, b);
        }
    }
}

#[test]
fn series_leading_term() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for params in [
        Params::type_a(2, rat(1, 2), int(1)).unwrap(),
        Params::type_b(2, int(2), int(1), rat(2, 5)).unwrap(),
        Params::type_a(1, int(0), rat(2, 5)).unwrap(),
    ] {
        for lambda in Partition::up_to_weight(params.n(), 3) {
            let p = construct_monic(&lambda, &params).unwrap();
            for r in 1..=params.n() {
                let x = sample_point(&mut rng, &params);
                let series = difference_series(&p.poly, r, &x, &params).unwrap();
                assert!(
                    series[..2 * r].iter().all(Zero::is_zero),
                    "{params} {lambda} r={r}"
                );
                let sign = if r % 2 == 0 { int(1) } else { int(-1) };
                let expected =
                    difference_eigenvalue(r, &lambda, &params).unwrap() * p.poly.eval(&x);
                assert_eq!(&series[2 * r] * sign, expected, "{params} {lambda} r={r}");
            }
        }
    }
}

#[test]
fn shifted_eigenvalue_reduces() {
    let params = Params::type_a(3, rat(1, 2), int(1)).unwrap();
    let l = lam(&[2, 1, 1]);
    assert_eq!(
        difference_eigenvalue(1, &l, &params).unwrap(),
        eigenvalue_e(1, &l, &params).unwrap()
    );
    let free = Params::type_a(3, int(0), int(1)).unwrap();
    for r in 1..=3 {
        assert_eq!(
            difference_eigenvalue(r, &l, &free).unwrap(),
            eigenvalue_e(r, &l, &free).unwrap()
        );
    }
    // (2ω)² Σ_{j<k}(λ_j + g₀)λ_k at λ = (2,1,1)
    assert_eq!(
        difference_eigenvalue(2, &l, &params).unwrap(),
        int(4) * (int(5) + rat(3, 2))
    );
}
