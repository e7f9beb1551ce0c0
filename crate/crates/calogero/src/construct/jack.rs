use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalars::{int, Rational};
use crate::sympoly::{Partition, Poly, SymPoly};

/// Σ x_j² ∂_j² p + 2g₀ Σ_{j<k} (x_j² ∂_j − x_k² ∂_k) p / (x_j − x_k).
pub fn sutherland_operator(p: &Poly, g0: &Rational) -> Result<Poly> {
    let n = p.n();
    let mut out = Poly::zero(n);
    let firsts: Vec<Poly> = (0..n).map(|j| p.derivative(j)).collect();
    for (j, d) in firsts.iter().enumerate() {
        out = &out + &d.derivative(j).mul_var(j, 2);
    }
    if g0.is_zero() {
        return Ok(out);
    }
    let two_g0 = g0 * int(2);
    for j in 0..n {
        for k in j + 1..n {
            let num = &firsts[j].mul_var(j, 2) - &firsts[k].mul_var(k, 2);
            out = &out + &num.div_pair(j, k, false)?.scale(&two_g0);
        }
    }
    Ok(out)
}

/// Monic Jack polynomial J_λ(x; 1/g₀) in the monomial basis.
pub fn jack_monic(lambda: &Partition, g0: &Rational) -> Result<SymPoly> {
    if g0.is_zero() {
        return Ok(SymPoly::msym(lambda, false));
    }
    let mut basis: Vec<Partition> = Partition::with_weight(lambda.n(), lambda.weight())
        .into_iter()
        .filter(|mu| mu.dominance_leq(lambda).unwrap_or(false))
        .collect();
    // Lexicographically decreasing order refines dominance, so λ comes first.
    basis.sort_by(|a, b| b.cmp(a));

    let images: Vec<BTreeMap<Partition, Rational>> = basis
        .iter()
        .map(|mu| {
            let image = sutherland_operator(SymPoly::msym(mu, false).poly(), g0)?;
            SymPoly::from_poly(image, false)?.expand_in_msym()
        })
        .collect::<Result<_>>()?;
    let eigen = |i: usize| {
        images[i]
            .get(&basis[i])
            .cloned()
            .unwrap_or_else(Rational::zero)
    };
    let top = eigen(0);

    let mut coeffs: Vec<Rational> = vec![Rational::zero(); basis.len()];
    coeffs[0] = Rational::one();
    for i in 1..basis.len() {
        let mut acc = Rational::zero();
        for k in 0..i {
            if let Some(c) = images[k].get(&basis[i]) {
                acc += &coeffs[k] * c;
            }
        }
        let gap = &top - eigen(i);
        if gap.is_zero() {
            if acc.is_zero() {
                continue;
            }
            return Err(Error::Internal(format!(
                "eigenvalue collision between {} and {}",
                lambda, basis[i]
            )));
        }
        coeffs[i] = acc / gap;
    }
    let map: BTreeMap<Partition, Rational> = basis.into_iter().zip(coeffs).collect();
    Ok(SymPoly::from_msym(lambda.n(), &map, false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn two_variable_examples() {
        let j = jack_monic(&p(&[1, 1]), &int(3)).unwrap();
        assert_eq!(j, SymPoly::msym(&p(&[1, 1]), false));

        let j = jack_monic(&p(&[2, 0]), &int(1)).unwrap();
        let map = j.expand_in_msym().unwrap();
        assert_eq!(map[&p(&[1, 1])], int(1));

        let j = jack_monic(&p(&[2, 0]), &int(2)).unwrap();
        let map = j.expand_in_msym().unwrap();
        assert_eq!(map[&p(&[1, 1])], rat(4, 3));
    }

    #[test]
    fn zero_coupling_is_monomial() {
        let l = p(&[3, 1, 0]);
        assert_eq!(jack_monic(&l, &int(0)).unwrap(), SymPoly::msym(&l, false));
    }
}
