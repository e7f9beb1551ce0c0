//! Exact divided-difference operators appearing in the second-order operators.

use super::poly::Poly;
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DividedDiff {
    /// (∂_j − ∂_k)/(x_j − x_k)
    MinusPair(usize, usize),
    /// (∂_j + ∂_k)/(x_j + x_k)
    PlusPair(usize, usize),
    /// ∂_j / x_j
    InvX(usize),
}

impl DividedDiff {
    /// Applies the operator; fails with `NonzeroRemainder` when the quotient is not polynomial.
    pub fn apply(self, p: &Poly) -> Result<Poly> {
        match self {
            DividedDiff::MinusPair(j, k) => {
                (&p.derivative(j) - &p.derivative(k)).div_pair(j, k, false)
            }
            DividedDiff::PlusPair(j, k) => {
                (&p.derivative(j) + &p.derivative(k)).div_pair(j, k, true)
            }
            DividedDiff::InvX(j) => p.derivative(j).div_var(j),
        }
    }
}

/// Σ_{j<k} of the pair operator, summed over all pairs.
pub fn sum_over_pairs(p: &Poly, plus: bool) -> Result<Poly> {
    let n = p.n();
    let mut acc = Poly::zero(n);
    for j in 0..n {
        for k in j + 1..n {
            let op = if plus {
                DividedDiff::PlusPair(j, k)
            } else {
                DividedDiff::MinusPair(j, k)
            };
            acc = &acc + &op.apply(p)?;
        }
    }
    Ok(acc)
}

pub fn sum_inv_x(p: &Poly) -> Result<Poly> {
    let mut acc = Poly::zero(p.n());
    for j in 0..p.n() {
        acc = &acc + &DividedDiff::InvX(j).apply(p)?;
    }
    Ok(acc)
}

pub fn laplacian(p: &Poly) -> Poly {
    let mut acc = Poly::zero(p.n());
    for j in 0..p.n() {
        acc = &acc + &p.derivative(j).derivative(j);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::scalars::int;

    #[test]
    fn spec_examples() {
        let x1 = Poly::var(2, 0);
        let x2 = Poly::var(2, 1);
        let p = &(&x1.pow(2) + &x2.pow(2)) + &(&x1 * &x2);
        assert_eq!(
            DividedDiff::MinusPair(0, 1).apply(&p).unwrap(),
            Poly::one(2)
        );

        let q = &x1.pow(2) * &x2.pow(2);
        assert_eq!(
            DividedDiff::InvX(0).apply(&q).unwrap(),
            x2.pow(2).scale(&int(2))
        );

        assert!(DividedDiff::MinusPair(0, 1)
            .apply(&Poly::one(2))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn nonpolynomial_quotient_detected() {
        let x1 = Poly::var(2, 0);
        assert_eq!(
            DividedDiff::MinusPair(0, 1).apply(&x1.pow(2)),
            Err(Error::NonzeroRemainder)
        );
        assert_eq!(
            DividedDiff::InvX(0).apply(&x1),
            Err(Error::NonzeroRemainder)
        );
    }
}
