//! Products of factors that are affine in g₀, evaluated by continuity in g₀.
//!
//! At resonant couplings individual factors such as (k−j)g₀ + λ_j − λ_k can vanish.
//! Each factor a + b·g₀ is tracked with its order of vanishing, so the product takes
//! the value of its continuous extension: zero when the numerator vanishes to higher
//! order, the ratio of the non-vanishing parts and slopes when the orders agree, and a
//! pole otherwise.

use num_traits::{One, Zero};

use super::rational::{format_rational, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct CouplingProduct {
    g0: Rational,
    value: Rational,
    order: i64,
    vanishes: bool,
}

impl CouplingProduct {
    pub fn new(g0: &Rational) -> Self {
        CouplingProduct {
            g0: g0.clone(),
            value: Rational::one(),
            order: 0,
            vanishes: false,
        }
    }

    pub fn mul_const(&mut self, q: &Rational) {
        if q.is_zero() {
            self.vanishes = true;
        } else {
            self.value *= q;
        }
    }

    pub fn div_const(&mut self, q: &Rational) -> Result<()> {
        if q.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.value /= q;
        Ok(())
    }

    /// Multiplies by `a + b·g₀`.
    pub fn mul_affine(&mut self, a: &Rational, b: &Rational) {
        let v = a + b * &self.g0;
        if !v.is_zero() {
            self.value *= v;
        } else if !b.is_zero() {
            self.value *= b;
            self.order += 1;
        } else {
            self.vanishes = true;
        }
    }

    /// Divides by `a + b·g₀`.
    pub fn div_affine(&mut self, a: &Rational, b: &Rational) -> Result<()> {
        let v = a + b * &self.g0;
        if !v.is_zero() {
            self.value /= v;
        } else if !b.is_zero() {
            self.value /= b;
            self.order -= 1;
        } else {
            return Err(Error::NonGeneric(format!(
                "identically vanishing denominator {}",
                format_rational(a)
            )));
        }
        Ok(())
    }

    /// Multiplies by the Pochhammer symbol [a + b·g₀]_l.
    pub fn mul_pochhammer(&mut self, a: &Rational, b: &Rational, l: u32) {
        for i in 0..l {
            self.mul_affine(&(a + Rational::from_integer(i.into())), b);
        }
    }

    pub fn div_pochhammer(&mut self, a: &Rational, b: &Rational, l: u32) -> Result<()> {
        for i in 0..l {
            self.div_affine(&(a + Rational::from_integer(i.into())), b)?;
        }
        Ok(())
    }

    pub fn value(&self) -> Result<Rational> {
        if self.vanishes || self.order > 0 {
            Ok(Rational::zero())
        } else if self.order == 0 {
            Ok(self.value.clone())
        } else {
            Err(Error::NonGeneric(format!(
                "pole of order {} at g0 = {}",
                -self.order,
                format_rational(&self.g0)
            )))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{int, rat};

    #[test]
    fn generic_value() {
        let mut p = CouplingProduct::new(&rat(1, 2));
        p.mul_affine(&int(1), &int(2)); // 2
        p.div_affine(&int(0), &int(1)).unwrap(); // 1/2
        assert_eq!(p.value().unwrap(), int(4));
    }

    #[test]
    fn removable_ratio_at_zero_coupling() {
        // [g]_1 / [2g]_1 → 1/2 as g → 0
        let mut p = CouplingProduct::new(&int(0));
        p.mul_pochhammer(&int(0), &int(1), 1);
        p.div_pochhammer(&int(0), &int(2), 1).unwrap();
        assert_eq!(p.value().unwrap(), rat(1, 2));
    }

    #[test]
    fn identically_zero_factor_wins() {
        let mut p = CouplingProduct::new(&int(1));
        p.mul_affine(&int(0), &int(0));
        p.div_affine(&int(-1), &int(1)).unwrap();
        assert_eq!(p.value().unwrap(), int(0));
    }

    #[test]
    fn pole_is_non_generic() {
        let mut p = CouplingProduct::new(&int(1));
        p.div_affine(&int(-1), &int(1)).unwrap();
        assert!(matches!(p.value(), Err(Error::NonGeneric(_))));
        assert!(p.clone().div_affine(&int(0), &int(0)).is_err());
    }
}
