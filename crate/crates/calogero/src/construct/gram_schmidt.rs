use std::collections::BTreeMap;

use num_traits::One;

use super::{Normalization, OrthoPoly};
use crate::error::{Error, Result};
use crate::linalg::solve;
use crate::scalars::{Family, Params, Rational};
use crate::sympoly::{GaussianFunctional, Partition, SymPoly};

/// Monic p_λ from ⟨p_λ, m_μ⟩ = 0 for every μ < λ, at integer couplings.
pub fn gram_schmidt_oracle(lambda: &Partition, params: &Params) -> Result<OrthoPoly> {
    let functional = GaussianFunctional::new(params)?;
    gram_schmidt_with(lambda, &functional)
}

pub fn gram_schmidt_with(lambda: &Partition, functional: &GaussianFunctional) -> Result<OrthoPoly> {
    let params = functional.params();
    if lambda.n() != params.n() {
        return Err(Error::InvalidParams(
            "partition length differs from n".into(),
        ));
    }
    let even = params.is_even();
    let parity = lambda.weight() % 2;
    let lower: Vec<Partition> = lambda
        .strictly_below()
        .into_iter()
        .filter(|mu| params.family() == Family::B || mu.weight() % 2 == parity)
        .collect();
    let monomials: Vec<SymPoly> = lower.iter().map(|mu| SymPoly::msym(mu, even)).collect();
    let top = SymPoly::msym(lambda, even);

    let gram: Vec<Vec<Rational>> = monomials
        .iter()
        .map(|a| {
            monomials
                .iter()
                .map(|b| functional.inner_rational(a.poly(), b.poly()))
                .collect()
        })
        .collect();
    let rhs: Vec<Rational> = monomials
        .iter()
        .map(|m| -functional.inner_rational(top.poly(), m.poly()))
        .collect();
    let coeffs = solve(gram, rhs)?;

    let mut map: BTreeMap<Partition, Rational> = lower.into_iter().zip(coeffs).collect();
    map.insert(lambda.clone(), Rational::one());
    Ok(OrthoPoly {
        params: params.clone(),
        lambda: lambda.clone(),
        poly: SymPoly::from_msym(params.n(), &map, even),
        normalization: Normalization::Monic,
    })
}
