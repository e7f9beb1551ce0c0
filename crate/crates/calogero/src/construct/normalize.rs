use num_traits::Zero;

use super::{Normalization, OrthoPoly};
use crate::error::{Error, Result};
use crate::scalars::{int, pow_i, rat, CouplingProduct, Family, Params, Rational};
use crate::sympoly::Partition;

/// Renormalization constant c_λ with P_λ = c_λ p_λ.
///
/// The pair product Π_{j<k}[(k−j)g₀]_{λ_j−λ_k}/[(1+k−j)g₀]_{λ_j−λ_k} is taken by continuity
/// in g₀, so at g₀ = 0 each pair with λ_j > λ_k contributes (k−j)/(k−j+1).
pub fn c_coeff(lambda: &Partition, params: &Params) -> Result<Rational> {
    let n = params.n();
    let parts = lambda.parts();
    let mut prod = CouplingProduct::new(params.g0());
    let zero = Rational::zero();
    for j in 0..n {
        for k in j + 1..n {
            let d = parts[j] - parts[k];
            let gap = int((k - j) as i64);
            prod.mul_pochhammer(&zero, &gap, d);
            prod.div_pochhammer(&zero, &(gap + int(1)), d)?;
        }
    }
    if params.family() == Family::B {
        for (j, &l) in parts.iter().enumerate() {
            let offset = params.g1() + rat(1, 2);
            prod.div_pochhammer(&offset, &int((n - 1 - j) as i64), l)?;
        }
        prod.mul_const(&pow_i(&-params.omega().clone(), lambda.weight() as i32));
    }
    prod.value()
}

/// Pieri normalization c_λ · p_λ of a monic polynomial.
pub fn pieri_normalize(p: &OrthoPoly) -> Result<OrthoPoly> {
    if p.normalization != Normalization::Monic {
        return Err(Error::InvalidParams(
            "pieri_normalize expects a monic polynomial".into(),
        ));
    }
    let c = c_coeff(&p.lambda, &p.params)?;
    Ok(OrthoPoly {
        params: p.params.clone(),
        lambda: p.lambda.clone(),
        poly: p.poly.scale(&c),
        normalization: Normalization::Pieri,
    })
}
