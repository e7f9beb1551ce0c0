use std::collections::BTreeMap;

use num_traits::Zero;

use super::coeffs::{uhat_b, vhat_general, vhat_r1, SignedIndexSets};
use crate::construct::Basis;
use crate::error::{Error, Result};
use crate::scalars::{format_rational, Family, Params, Rational};
use crate::sympoly::{elementary_sym, GaussianFunctional, Partition, SymPoly};
use crate::verify::Check;

fn residual_check(lhs: &SymPoly, rhs: &SymPoly, what: &str) -> Check {
    let residual = lhs.sub(rhs);
    if residual.is_zero() {
        Check::pass()
    } else {
        Check::fail(
            residual.poly().len(),
            format!("{what}: residual {residual}"),
        )
    }
}

fn boundary_failure(lambda: &Partition, sets: &SignedIndexSets, c: &Rational) -> Check {
    Check::fail(
        0,
        format!(
            "coefficient {} for J+={:?} J-={:?} leaves Λ from {lambda}",
            format_rational(c),
            sets.plus(),
            sets.minus()
        ),
    )
}

fn check_family(params: &Params, family: Family) -> Result<()> {
    if params.family() != family {
        return Err(Error::InvalidParams(format!("check needs family {family}")));
    }
    Ok(())
}

/// The r = 1 Pieri identity with P in the Pieri normalization.
pub fn pieri_r1_check(lambda: &Partition, basis: &Basis) -> Result<Check> {
    let params = basis.params();
    let n = params.n();
    let p = basis.pieri(lambda)?;
    let lhs = elementary_sym(1, params)?.mul(&p.poly);
    let mut rhs = SymPoly::zero(n, params.is_even());
    for j in 1..=n as i64 {
        for signed in [j, -j] {
            let v = vhat_r1(signed, lambda, params)?;
            let idx = [j as usize - 1];
            let target = if signed > 0 {
                lambda.shifted(&idx, &[])
            } else {
                lambda.shifted(&[], &idx)
            };
            match target {
                Some(mu) => {
                    rhs = rhs.add(&basis.pieri(&mu)?.poly.scale(&v));
                    if params.family() == Family::B {
                        rhs = rhs.sub(&p.poly.scale(&v));
                    }
                }
                None if !v.is_zero() => {
                    let sets = if signed > 0 {
                        SignedIndexSets::new(idx.to_vec(), vec![], n)?
                    } else {
                        SignedIndexSets::new(vec![], idx.to_vec(), n)?
                    };
                    return Ok(boundary_failure(lambda, &sets, &v));
                }
                None => {}
            }
        }
    }
    Ok(residual_check(&lhs, &rhs, "r = 1 Pieri"))
}

/// Ê_r^B P_λ = Σ V̂_{J₊,J₋;K} Û_{K, r−|J₊|−|J₋|} P_{λ+e_{J₊}−e_{J₋}}.
pub fn pieri_full_b_check(r: usize, lambda: &Partition, basis: &Basis) -> Result<Check> {
    let params = basis.params();
    check_family(params, Family::B)?;
    let n = params.n();
    let p = basis.pieri(lambda)?;
    let lhs = elementary_sym(r, params)?.mul(&p.poly);
    let mut rhs = SymPoly::zero(n, true);
    for sets in SignedIndexSets::all(n, r) {
        let k_set = sets.complement(n);
        let v = vhat_general(&sets, &k_set, lambda, params)?;
        match sets.target(lambda) {
            Some(mu) => {
                if v.is_zero() {
                    continue;
                }
                let u = uhat_b(&k_set, r - sets.size(), lambda, params)?;
                rhs = rhs.add(&basis.pieri(&mu)?.poly.scale(&(v * u)));
            }
            None if !v.is_zero() => return Ok(boundary_failure(lambda, &sets, &v)),
            None => {}
        }
    }
    Ok(residual_check(&lhs, &rhs, "Laguerre Pieri"))
}

/// Gram-projected expansion of Ê_r^A P_λ in the basis P_μ.
#[derive(Debug, Clone)]
pub struct StructureReport {
    pub check: Check,
    /// Coefficients on μ = λ + e_{J₊} − e_{J₋} with |J₊| + |J₋| < r, which have no closed form.
    pub subleading: BTreeMap<Partition, Rational>,
}

/// Expands Ê_r^A P_λ by exact Gram projections and checks support and leading coefficients.
pub fn pieri_structure_a_check(
    r: usize,
    lambda: &Partition,
    basis: &Basis,
) -> Result<StructureReport> {
    let params = basis.params();
    check_family(params, Family::A)?;
    let n = params.n();
    let functional = GaussianFunctional::new(params)?;
    let p = basis.pieri(lambda)?;
    let product = elementary_sym(r, params)?.mul(&p.poly);

    let reachable: BTreeMap<Partition, SignedIndexSets> = SignedIndexSets::all(n, r)
        .into_iter()
        .filter_map(|s| s.target(lambda).map(|mu| (mu, s)))
        .collect();

    let mut reconstructed = SymPoly::zero(n, false);
    let mut subleading = BTreeMap::new();
    let mut problems = Vec::new();
    for mu in Partition::up_to_weight(n, lambda.weight() + r as u32) {
        let q = basis.pieri(&mu)?;
        let num = functional.inner_rational(product.poly(), q.poly.poly());
        let den = functional.inner_rational(q.poly.poly(), q.poly.poly());
        if den.is_zero() {
            return Err(Error::Internal(format!("vanishing Gram norm for {mu}")));
        }
        let coeff = num / den;
        match reachable.get(&mu) {
            Some(sets) if sets.size() == r => {
                let v = vhat_general(sets, &sets.complement(n), lambda, params)?;
                if v != coeff {
                    problems.push(format!(
                        "{mu}: projection {} vs closed form {}",
                        format_rational(&coeff),
                        format_rational(&v)
                    ));
                }
            }
            Some(_) => {
                subleading.insert(mu.clone(), coeff.clone());
            }
            None if !coeff.is_zero() => {
                problems.push(format!("support leak on {mu}: {}", format_rational(&coeff)));
            }
            None => {}
        }
        if !coeff.is_zero() {
            reconstructed = reconstructed.add(&q.poly.scale(&coeff));
        }
    }
    let mut check = residual_check(&product, &reconstructed, "Gram expansion");
    if !problems.is_empty() {
        check = Check::fail(check.residual_term_count, problems.join("; "));
    }
    Ok(StructureReport { check, subleading })
}
