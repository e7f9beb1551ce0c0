use calogero::construct::Basis;
use calogero::pieri::{
    chained_norm_ratio, mehta_macdonald, norm_formula, norm_ratio, norm_recurrence_check,
    pieri_full_b_check, pieri_r1_check, pieri_structure_a_check,
};
use calogero::scalars::{int, rat, Params, Rational};
use calogero::sympoly::Partition;
use calogero::verify::{Check, Status};
use calogero::Error;

fn g0_values() -> Vec<Rational> {
    vec![int(0), rat(1, 2), int(1), int(2)]
}

fn g1_values() -> Vec<Rational> {
    vec![int(0), rat(1, 2), int(1), rat(3, 2)]
}

fn omegas() -> Vec<Rational> {
    vec![int(1), rat(2, 5)]
}

fn settle(c: calogero::Result<Check>) -> Check {
    Check::from_result(c).unwrap()
}

fn assert_ok(c: &Check, what: &str) {
    assert!(
        matches!(c.status, Status::Pass | Status::NonGeneric),
        "{what}: {:?}",
        c.detail
    );
}

#[test]
fn laguerre_grid() {
    let mut passes = 0;
    for n in 1..=3 {
        for g0 in g0_values() {
            for g1 in g1_values() {
                for omega in omegas() {
                    let params = Params::type_b(n, g0.clone(), g1.clone(), omega).unwrap();
                    let basis = Basis::new(&params);
                    for l in Partition::up_to_weight(n, 3) {
                        let c = settle(pieri_r1_check(&l, &basis));
                        assert_ok(&c, &format!("r1 {params} {l}"));
                        for r in 1..=n {
                            let c = settle(pieri_full_b_check(r, &l, &basis));
                            assert_ok(&c, &format!("full r={r} {params} {l}"));
                            passes += c.passed() as usize;
                        }
                    }
                }
            }
        }
    }
    assert!(passes > 500, "{passes}");
}

#[test]
fn hermite_grid() {
    for n in 1..=3 {
        for g0 in g0_values() {
            for omega in omegas() {
                let params = Params::type_a(n, g0.clone(), omega).unwrap();
                let basis = Basis::new(&params);
                for l in Partition::up_to_weight(n, 3) {
                    let c = settle(pieri_r1_check(&l, &basis));
                    assert_ok(&c, &format!("r1 {params} {l}"));
                }
            }
        }
    }
}

#[test]
fn hermite_structure_by_projection() {
    for n in 1..=3 {
        for g0 in [int(0), int(1), int(2)] {
            let params = Params::type_a(n, g0, rat(2, 5)).unwrap();
            let basis = Basis::new(&params);
            for l in Partition::up_to_weight(n, if n == 3 { 2 } else { 3 }) {
                for r in 1..=n {
                    let report = pieri_structure_a_check(r, &l, &basis).unwrap();
                    assert!(
                        report.check.passed(),
                        "{params} {l} r={r}: {:?}",
                        report.check.detail
                    );
                    if r == 1 {
                        assert!(report.subleading.values().all(|c| *c == int(0)));
                    }
                }
            }
        }
    }
}

#[test]
fn norm_triangle() {
    for n in 1..=3 {
        for g0 in g0_values() {
            for g1 in g1_values() {
                for family_b in [false, true] {
                    if !family_b && g1 != int(0) {
                        continue;
                    }
                    let params = if family_b {
                        Params::type_b(n, g0.clone(), g1.clone(), rat(2, 5)).unwrap()
                    } else {
                        Params::type_a(n, g0.clone(), rat(2, 5)).unwrap()
                    };
                    for l in Partition::up_to_weight(n, 3) {
                        let ratio = match norm_ratio(&l, &params) {
                            Err(Error::NonGeneric(_)) => continue,
                            other => other.unwrap(),
                        };
                        assert_eq!(chained_norm_ratio(&l, &params).unwrap(), ratio);
                        if let (Ok(full), Ok(one)) =
                            (norm_formula(&l, &params), mehta_macdonald(&params))
                        {
                            let q = full.checked_div(&one).unwrap();
                            assert_eq!(q.as_rational(), Some(ratio), "{params} {l}");
                        }
                        for r in 1..=n {
                            if l.shifted(&(0..r).collect::<Vec<_>>(), &[]).is_some() {
                                let c = settle(norm_recurrence_check(&l, r, &params));
                                assert_ok(&c, &format!("{params} {l} r={r}"));
                            }
                        }
                    }
                }
            }
        }
    }
}
