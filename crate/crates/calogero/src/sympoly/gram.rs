//! Exact Gaussian integrals against the weights Δ^A, Δ^B at integer couplings.

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::{Exponent, Poly};
use super::sym::SymPoly;
use crate::error::Result;
use crate::scalars::{double_factorial_odd, pow_i, ExactScalar, Family, Params, Rational};

/// Linear functional p ↦ ∫ p Δ dx, cached per monomial.
///
/// Every value is (π/ω)^{n/2} times a rational; only the rational part is cached.
pub struct GaussianFunctional {
    params: Params,
    weight: Poly,
    one_dim: Mutex<Vec<Rational>>,
    cache: Mutex<HashMap<Exponent, Rational>>,
}

/// Polynomial part of the weight: Π(x_j−x_k)^{2g₀}, or Π(x_j²−x_k²)^{2g₀}·Πx_j^{2g₁}.
pub fn weight_polynomial(params: &Params) -> Result<Poly> {
    let (g0, g1) = params.integer_couplings()?;
    let n = params.n();
    let mut w = Poly::one(n);
    for j in 0..n {
        for k in j + 1..n {
            let base = match params.family() {
                Family::A => &Poly::var(n, j) - &Poly::var(n, k),
                Family::B => &Poly::var(n, j).pow(2) - &Poly::var(n, k).pow(2),
            };
            w = &w * &base.pow(2 * g0);
        }
    }
    if params.family() == Family::B && g1 > 0 {
        for j in 0..n {
            w = w.mul_var(j, 2 * g1);
        }
    }
    Ok(w)
}

impl GaussianFunctional {
    pub fn new(params: &Params) -> Result<Self> {
        Ok(GaussianFunctional {
            weight: weight_polynomial(params)?,
            params: params.clone(),
            one_dim: Mutex::new(Vec::new()),
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    /// (π/ω)^{n/2}, the common transcendental factor.
    pub fn base(&self) -> ExactScalar {
        let n = self.params.n() as i32;
        let omega = self.params.omega();
        &ExactScalar::pi_half_power(n, omega) * &ExactScalar::omega_half_power(-n, omega)
    }

    /// ∫ x^{a} e^{−ωx²} dx divided by √(π/ω): (a−1)!!/(2ω)^{a/2} for even a.
    fn one_dim_moment(&self, a: u32) -> Rational {
        if a % 2 == 1 {
            return Rational::zero();
        }
        let k = (a / 2) as usize;
        let mut table = self.one_dim.lock().unwrap();
        while table.len() <= k {
            let i = table.len() as u32;
            let two_omega = self.params.omega() * Rational::from_integer(BigInt::from(2));
            let v =
                Rational::from_integer(double_factorial_odd(i)) * pow_i(&two_omega, -(i as i32));
            table.push(v);
        }
        table[k].clone()
    }

    fn product_moment(&self, e: &[u32]) -> Rational {
        let mut acc = Rational::one();
        for &a in e {
            let m = self.one_dim_moment(a);
            if m.is_zero() {
                return m;
            }
            acc *= m;
        }
        acc
    }

    /// Rational part of ∫ x^e Δ dx.
    fn monomial_value(&self, e: &[u32]) -> Rational {
        if let Some(v) = self.cache.lock().unwrap().get(e) {
            return v.clone();
        }
        let mut acc = Rational::zero();
        for (w, c) in self.weight.terms() {
            let shifted: Vec<u32> = e.iter().zip(w).map(|(a, b)| a + b).collect();
            let m = self.product_moment(&shifted);
            if !m.is_zero() {
                acc += c * m;
            }
        }
        self.cache.lock().unwrap().insert(e.to_vec(), acc.clone());
        acc
    }

    /// Rational part of ∫ p Δ dx, i.e. the value divided by (π/ω)^{n/2}.
    pub fn rational_part(&self, p: &Poly) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in p.terms() {
            let v = self.monomial_value(e);
            if !v.is_zero() {
                acc += c * v;
            }
        }
        acc
    }

    pub fn moment(&self, p: &Poly) -> ExactScalar {
        self.base().scale(&self.rational_part(p))
    }

    /// Rational part of ⟨f, g⟩.
    pub fn inner_rational(&self, f: &Poly, g: &Poly) -> Rational {
        self.rational_part(&(f * g))
    }

    pub fn inner(&self, f: &SymPoly, g: &SymPoly) -> ExactScalar {
        self.moment(&(f.poly() * g.poly()))
    }
}

/// ∫ p Δ^C dx for integer couplings.
pub fn gaussian_moment(p: &SymPoly, params: &Params) -> Result<ExactScalar> {
    Ok(GaussianFunctional::new(params)?.moment(p.poly()))
}

/// ⟨f, g⟩_C = ∫ f g Δ^C dx for integer couplings.
pub fn gram_inner(f: &SymPoly, g: &SymPoly, params: &Params) -> Result<ExactScalar> {
    Ok(GaussianFunctional::new(params)?.inner(f, g))
}
