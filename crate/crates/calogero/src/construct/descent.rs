use num_traits::Zero;

use super::jack::jack_monic;
use super::{Normalization, OrthoPoly};
use crate::error::{Error, Result};
use crate::scalars::{int, Family, Params};
use crate::sympoly::{laplacian, sum_inv_x, sum_over_pairs, Partition, Poly, SymPoly};

/// Degree-lowering part T₋₂ of D₁ (D₁ = 2ω·Euler + T₋₂).
///
/// A: −Σ∂² − 2g₀Σ_{j<k}(∂_j−∂_k)/(x_j−x_k).
/// B: additionally −2g₁Σ(1/x_j)∂_j and −2g₀Σ_{j<k}(∂_j+∂_k)/(x_j+x_k).
pub fn lowering_part(p: &Poly, params: &Params) -> Result<Poly> {
    let mut out = -&laplacian(p);
    let g0 = params.g0();
    if !g0.is_zero() {
        let mut pairs = sum_over_pairs(p, false)?;
        if params.family() == Family::B {
            pairs = &pairs + &sum_over_pairs(p, true)?;
        }
        out = &out - &pairs.scale(&(g0 * int(2)));
    }
    let g1 = params.g1();
    if params.family() == Family::B && !g1.is_zero() {
        out = &out - &sum_inv_x(p)?.scale(&(g1 * int(2)));
    }
    Ok(out)
}

fn check_lambda(lambda: &Partition, params: &Params) -> Result<()> {
    if lambda.n() != params.n() {
        return Err(Error::InvalidParams(format!(
            "partition {} has {} parts but n = {}",
            lambda,
            lambda.n(),
            params.n()
        )));
    }
    Ok(())
}

/// Monic p_λ by Jack top term and degree descent, for either family.
pub fn construct_monic(lambda: &Partition, params: &Params) -> Result<OrthoPoly> {
    check_lambda(lambda, params)?;
    let even = params.is_even();
    let jack = jack_monic(lambda, params.g0())?;
    let (top, top_degree) = if even {
        (jack.in_squares(), 2 * lambda.weight())
    } else {
        (jack, lambda.weight())
    };
    let two_omega = params.omega() * int(2);
    let mut total = top.poly().clone();
    let mut current = total.clone();
    let mut d = top_degree;
    while d >= 2 {
        d -= 2;
        let lowered = lowering_part(&current, params)?;
        let gap = &two_omega * int((top_degree - d) as i64);
        current = lowered.scale(&gap.recip());
        total = &total + &current;
    }
    Ok(OrthoPoly {
        params: params.clone(),
        lambda: lambda.clone(),
        poly: SymPoly::from_poly(total, even)?,
        normalization: Normalization::Monic,
    })
}

/// Multivariable Hermite polynomial p_λ^A.
pub fn hermite_poly(lambda: &Partition, params: &Params) -> Result<OrthoPoly> {
    if params.family() != Family::A {
        return Err(Error::InvalidParams("hermite_poly needs family A".into()));
    }
    construct_monic(lambda, params)
}

/// Multivariable Laguerre polynomial p_λ^B.
pub fn laguerre_poly(lambda: &Partition, params: &Params) -> Result<OrthoPoly> {
    if params.family() != Family::B {
        return Err(Error::InvalidParams("laguerre_poly needs family B".into()));
    }
    construct_monic(lambda, params)
}
