//! Exact scalars of the form Σ q · π^{k/2} · (√ω)^f with q rational.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{
    double_factorial_odd, factorial, format_rational, int, pow_i, rational_sqrt, to_f64, Rational,
};
use crate::error::{Error, Result};

/// Key of one term: (exponent of π^{1/2}, whether a factor √ω is present).
type Grade = (i32, bool);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactScalar {
    omega: Rational,
    terms: BTreeMap<Grade, Rational>,
}

impl ExactScalar {
    pub fn zero(omega: &Rational) -> Self {
        ExactScalar {
            omega: omega.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn from_rational(q: Rational, omega: &Rational) -> Self {
        Self::monomial(q, 0, false, omega)
    }

    /// `q · π^{half_pi_exp/2} · (√ω)^{sqrt_omega}`.
    pub fn monomial(q: Rational, half_pi_exp: i32, sqrt_omega: bool, omega: &Rational) -> Self {
        let mut s = Self::zero(omega);
        s.push(half_pi_exp, sqrt_omega, q);
        s
    }

    /// ω^{e/2} for any integer `e`.
    pub fn omega_half_power(e: i32, omega: &Rational) -> Self {
        let q = pow_i(omega, e.div_euclid(2));
        Self::monomial(q, 0, e.rem_euclid(2) == 1, omega)
    }

    /// π^{k/2}.
    pub fn pi_half_power(k: i32, omega: &Rational) -> Self {
        Self::monomial(Rational::one(), k, false, omega)
    }

    pub fn omega(&self) -> &Rational {
        &self.omega
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates `(half_pi_exp, sqrt_omega, coeff)`.
    pub fn terms(&self) -> impl Iterator<Item = (i32, bool, &Rational)> {
        self.terms.iter().map(|(&(k, f), q)| (k, f, q))
    }

    /// The rational value when the scalar has no π or √ω content.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&(0, false)).cloned(),
            _ => None,
        }
    }

    fn push(&mut self, k: i32, flag: bool, q: Rational) {
        let (flag, q) = match (flag, rational_sqrt(&self.omega)) {
            (true, Some(root)) => (false, q * root),
            (f, _) => (f, q),
        };
        if q.is_zero() {
            return;
        }
        let slot = self.terms.entry((k, flag)).or_insert_with(Rational::zero);
        *slot += q;
        if slot.is_zero() {
            self.terms.remove(&(k, flag));
        }
    }

    fn same_ring(&self, other: &Self) {
        assert_eq!(
            self.omega, other.omega,
            "ExactScalar values from different ω sessions combined"
        );
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let mut out = Self::zero(&self.omega);
        for (&(k, f), c) in &self.terms {
            out.push(k, f, c * q);
        }
        out
    }

    pub fn checked_div(&self, d: &Self) -> Result<Self> {
        Ok(self * &d.inverse()?)
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let grades: Vec<i32> = self.terms.keys().map(|g| g.0).collect();
        if grades.iter().any(|&k| k != grades[0]) {
            return Err(Error::NotInvertible(format!("mixed π grades in {self}")));
        }
        let k = grades[0];
        let a = self
            .terms
            .get(&(k, false))
            .cloned()
            .unwrap_or_else(Rational::zero);
        let b = self
            .terms
            .get(&(k, true))
            .cloned()
            .unwrap_or_else(Rational::zero);
        // (a + b√ω)^{-1} = (a − b√ω) / (a² − b²ω); the norm vanishes only if ω is a square,
        // in which case `b` is already folded into `a`.
        let norm = &a * &a - &b * &b * &self.omega;
        if norm.is_zero() {
            return Err(Error::NotInvertible(format!("zero norm for {self}")));
        }
        let mut out = Self::zero(&self.omega);
        out.push(-k, false, &a / &norm);
        out.push(-k, true, -(&b / &norm));
        Ok(out)
    }

    pub fn pow_int(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::from_rational(Rational::one(), &self.omega);
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    pub fn to_f64(&self) -> f64 {
        let w = to_f64(&self.omega);
        self.terms
            .iter()
            .map(|(&(k, f), q)| {
                let mut v = to_f64(q) * std::f64::consts::PI.powf(k as f64 / 2.0);
                if f {
                    v *= w.sqrt();
                }
                v
            })
            .sum()
    }
}

impl Add for &ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: &ExactScalar) -> ExactScalar {
        self.same_ring(rhs);
        let mut out = self.clone();
        for (&(k, f), q) in &rhs.terms {
            out.push(k, f, q.clone());
        }
        out
    }
}

impl Sub for &ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: &ExactScalar) -> ExactScalar {
        self + &(-rhs)
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        self.scale(&int(-1))
    }
}

impl Mul for &ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: &ExactScalar) -> ExactScalar {
        self.same_ring(rhs);
        let mut out = ExactScalar::zero(&self.omega);
        for (&(k1, f1), q1) in &self.terms {
            for (&(k2, f2), q2) in &rhs.terms {
                let mut q = q1 * q2;
                if f1 && f2 {
                    q *= &self.omega;
                }
                out.push(k1 + k2, f1 ^ f2, q);
            }
        }
        out
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(k, s), q)| {
                let mut t = format_rational(q);
                if k != 0 {
                    t.push_str(&format!("·π^({k}/2)"));
                }
                if s {
                    t.push_str("·√ω");
                }
                t
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarTerm {
    #[serde(rename = "halfPiExp")]
    pub half_pi_exp: i32,
    #[serde(rename = "sqrtOmega")]
    pub sqrt_omega: u8,
    #[serde(with = "super::rational::serde_str")]
    pub coeff: Rational,
}

impl ExactScalar {
    pub fn to_records(&self) -> Vec<ScalarTerm> {
        self.terms()
            .map(|(k, f, q)| ScalarTerm {
                half_pi_exp: k,
                sqrt_omega: f as u8,
                coeff: q.clone(),
            })
            .collect()
    }

    pub fn from_records(records: &[ScalarTerm], omega: &Rational) -> Self {
        let mut s = Self::zero(omega);
        for r in records {
            s.push(r.half_pi_exp, r.sqrt_omega != 0, r.coeff.clone());
        }
        s
    }
}

impl Serialize for ExactScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_records().serialize(s)
    }
}

/// Γ(a) for a positive integer or half-integer `a`.
pub fn gamma_half_integer(a: &Rational, omega: &Rational) -> Result<ExactScalar> {
    use num_traits::ToPrimitive;
    let twice = super::rational::twice_as_integer(a)
        .ok_or_else(|| Error::NotRepresentable(format!("Γ({}) needs a half-integer", a)))?;
    if twice <= 0 {
        return Err(Error::NotRepresentable(format!(
            "Γ({}) needs a positive argument",
            format_rational(a)
        )));
    }
    let twice = twice
        .to_u32()
        .ok_or_else(|| Error::NotRepresentable("Γ argument too large".into()))?;
    if twice % 2 == 0 {
        let q = Rational::from_integer(factorial(twice / 2 - 1));
        Ok(ExactScalar::from_rational(q, omega))
    } else {
        // Γ(k + 1/2) = (2k−1)!! / 2^k · √π
        let k = (twice - 1) / 2;
        let q = Rational::new(double_factorial_odd(k), num_bigint::BigInt::from(2).pow(k));
        Ok(ExactScalar::monomial(q, 1, false, omega))
    }
}
