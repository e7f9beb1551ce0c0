use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::construct::lowering_part;
use crate::error::{Error, Result};
use crate::linalg::rank;
use crate::scalars::{int, rat, Family, Params, Rational};
use crate::sympoly::{Partition, Poly, SymPoly};

/// L^C p, the deformed Laplacian with first-order term 2g₁x_j^{−1}∂_j for family B.
pub fn apply_l(p: &SymPoly, params: &Params) -> Result<SymPoly> {
    if p.n() != params.n() {
        return Err(Error::InvalidParams(format!(
            "polynomial in {} variables, expected {}",
            p.n(),
            params.n()
        )));
    }
    let image = -&lowering_part(p.poly(), params)?;
    SymPoly::from_poly(image, p.even() && params.is_even())
}

/// r² = Σ x_j².
pub fn r_squared(n: usize) -> Poly {
    let mut acc = Poly::zero(n);
    for j in 0..n {
        acc = &acc + &Poly::var(n, j).pow(2);
    }
    acc
}

/// d^A = g₀n(n−1)/2 or d^B = g₀n(n−1) + ng₁.
pub fn deformation_degree(params: &Params) -> Rational {
    let n = int(params.n() as i64);
    let pairs = &n * (&n - int(1));
    match params.family() {
        Family::A => params.g0() * pairs / int(2),
        Family::B => params.g0() * pairs + n * params.g1(),
    }
}

/// Degree in x of a harmonic of natural degree l (l in x for A, in x² for B).
pub fn x_degree(l: u32, params: &Params) -> u32 {
    match params.family() {
        Family::A => l,
        Family::B => 2 * l,
    }
}

/// Monic R_m in t = r²: a_{k+1}(k+1)(k+b) = ω(k−m)a_k with b = deg_x Y + n/2 + d^C.
pub fn radial_poly(m: u32, l: u32, params: &Params) -> Vec<Rational> {
    let b =
        int(x_degree(l, params) as i64) + rat(params.n() as i64, 2) + deformation_degree(params);
    let mut coeffs = vec![Rational::zero(); m as usize + 1];
    coeffs[m as usize] = Rational::one();
    for k in (0..m).rev() {
        let kk = int(k as i64);
        let den = params.omega() * (&kk - int(m as i64));
        let num = (&kk + int(1)) * (&kk + &b);
        coeffs[k as usize] = &coeffs[k as usize + 1] * num / den;
    }
    coeffs
}

/// Evaluates Σ a_k t^k at t = r².
pub fn radial_in_x(coeffs: &[Rational], n: usize) -> Poly {
    let r2 = r_squared(n);
    let mut acc = Poly::zero(n);
    for c in coeffs.iter().rev() {
        acc = &(&acc * &r2) + &Poly::constant(n, c.clone());
    }
    acc
}

/// Partitions indexing the homogeneous symmetric polynomials of x-degree d, if any.
pub(super) fn homogeneous_labels(d: u32, params: &Params) -> Vec<Partition> {
    match params.family() {
        Family::A => Partition::with_weight(params.n(), d),
        Family::B if d % 2 == 0 => Partition::with_weight(params.n(), d / 2),
        Family::B => Vec::new(),
    }
}

pub(super) fn coordinates(p: &SymPoly, labels: &[Partition]) -> Result<Vec<Rational>> {
    let map: BTreeMap<Partition, Rational> = p.expand_in_msym()?;
    if map.keys().any(|mu| !labels.contains(mu)) {
        return Err(Error::Internal(
            "polynomial leaves the expected homogeneous space".into(),
        ));
    }
    Ok(labels
        .iter()
        .map(|mu| map.get(mu).cloned().unwrap_or_else(Rational::zero))
        .collect())
}

/// dim of the kernel of L^C on homogeneous symmetric polynomials of natural degree l.
pub fn harmonic_dimension(l: u32, params: &Params) -> Result<usize> {
    let d = x_degree(l, params);
    let source = homogeneous_labels(d, params);
    if d < 2 {
        return Ok(source.len());
    }
    let target = homogeneous_labels(d - 2, params);
    let mut columns = Vec::new();
    for mu in &source {
        let image = apply_l(&SymPoly::msym(mu, params.is_even()), params)?;
        columns.push(coordinates(&image, &target)?);
    }
    let rows: Vec<Vec<Rational>> = (0..target.len())
        .map(|i| columns.iter().map(|c| c[i].clone()).collect())
        .collect();
    Ok(source.len() - rank(rows))
}

/// dim P_l − dim P_{l−2} (A) or dim P_l − dim P_{l−1} (B).
pub fn expected_harmonic_dimension(l: u32, params: &Params) -> usize {
    let n = params.n();
    let count = |w: u32| Partition::with_weight(n, w).len();
    let lower = match params.family() {
        Family::A if l >= 2 => count(l - 2),
        Family::B if l >= 1 => count(l - 1),
        _ => 0,
    };
    count(l) - lower
}
