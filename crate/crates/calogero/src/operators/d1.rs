use crate::construct::lowering_part;
use crate::error::{Error, Result};
use crate::scalars::{int, pow_i, Family, Params, Rational};
use crate::sympoly::{Partition, SymPoly};

/// D₁ = Σ(−∂_j² + 2ωx_j∂_j) plus the coupling terms of the family.
pub fn apply_d1(p: &SymPoly, params: &Params) -> Result<SymPoly> {
    if p.n() != params.n() {
        return Err(Error::InvalidParams(format!(
            "polynomial in {} variables but n = {}",
            p.n(),
            params.n()
        )));
    }
    let even = params.is_even() || p.even();
    let input = SymPoly::from_poly(p.poly().clone(), even)?;
    let euler = input.poly().euler().scale(&(params.omega() * int(2)));
    let out = &euler + &lowering_part(input.poly(), params)?;
    SymPoly::from_poly(out, even)
}

fn elementary_of_parts(r: usize, parts: &[u32]) -> Rational {
    let mut e = vec![int(0); r + 1];
    e[0] = int(1);
    for &l in parts {
        let l = int(l as i64);
        for k in (1..=r).rev() {
            let prev = e[k - 1].clone();
            e[k] += prev * &l;
        }
    }
    e.swap_remove(r)
}

fn check_order(r: usize, lambda: &Partition, params: &Params) -> Result<()> {
    if r == 0 || r > params.n() {
        return Err(Error::InvalidParams(format!(
            "r = {r} outside 1..={}",
            params.n()
        )));
    }
    if lambda.n() != params.n() {
        return Err(Error::InvalidParams(format!(
            "partition {lambda} does not have {} parts",
            params.n()
        )));
    }
    Ok(())
}

/// 2ω for A, 4ω for B.
fn frequency(params: &Params) -> Rational {
    match params.family() {
        Family::A => params.omega() * int(2),
        Family::B => params.omega() * int(4),
    }
}

/// E_r(λ) = (2ω)^r e_r(λ) for A and (4ω)^r e_r(λ) for B.
pub fn eigenvalue_e(r: usize, lambda: &Partition, params: &Params) -> Result<Rational> {
    check_order(r, lambda, params)?;
    Ok(pow_i(&frequency(params), r as i32) * elementary_of_parts(r, lambda.parts()))
}

/// Eigenvalue of the leading β^{2r} part of D_{r,β} on p_λ:
/// (2ω)^r (A) or (4ω)^r (B) times Σ_{j₁<⋯<j_r} Π_i (λ_{j_i} + (r−i)g₀).
///
/// Agrees with [`eigenvalue_e`] when r = 1 or g₀ = 0.
pub fn difference_eigenvalue(r: usize, lambda: &Partition, params: &Params) -> Result<Rational> {
    check_order(r, lambda, params)?;
    let n = params.n();
    let mut total = int(0);
    let mut chosen = Vec::with_capacity(r);
    subsets(n, r, 0, &mut chosen, &mut |js: &[usize]| {
        let mut term = int(1);
        for (i, &j) in js.iter().enumerate() {
            term *= int(lambda.parts()[j] as i64) + params.g0() * int((r - 1 - i) as i64);
        }
        total += term;
    });
    Ok(pow_i(&frequency(params), r as i32) * total)
}

fn subsets(
    n: usize,
    r: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if chosen.len() == r {
        visit(chosen);
        return;
    }
    for j in start..n {
        chosen.push(j);
        subsets(n, r, j + 1, chosen, visit);
        chosen.pop();
    }
}

/// Ground energy E₀ subtracted in the Hamiltonians.
pub fn ground_energy(params: &Params) -> Rational {
    let n = int(params.n() as i64);
    let inner = match params.family() {
        Family::A => int(1) + params.g0() * (&n - int(1)),
        Family::B => int(1) + params.g0() * int(2) * (&n - int(1)) + params.g1() * int(2),
    };
    params.omega() * n * inner
}
