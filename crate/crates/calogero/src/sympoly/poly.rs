//! Sparse multivariate polynomials over ℚ without any symmetry requirement.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalars::{format_rational, int, to_f64, Rational};

pub type Exponent = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    n: usize,
    terms: BTreeMap<Exponent, Rational>,
}

impl Poly {
    pub fn zero(n: usize) -> Self {
        Poly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, q: Rational) -> Self {
        Self::monomial(vec![0; n], q)
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Rational::one())
    }

    pub fn monomial(exp: Exponent, q: Rational) -> Self {
        let mut p = Self::zero(exp.len());
        p.add_term(exp, q);
        p
    }

    /// The coordinate `x_j` (0-based).
    pub fn var(n: usize, j: usize) -> Self {
        let mut e = vec![0; n];
        e[j] = 1;
        Self::monomial(e, Rational::one())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[u32]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, exp: Exponent, q: Rational) {
        debug_assert_eq!(exp.len(), self.n);
        if q.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(q);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += q;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero(self.n);
        }
        Poly {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * q)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.n);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self, j: usize) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            if e[j] > 0 {
                let mut f = e.clone();
                f[j] -= 1;
                out.add_term(f, c * int(e[j] as i64));
            }
        }
        out
    }

    /// Multiplies by `x_j^k`.
    pub fn mul_var(&self, j: usize, k: u32) -> Self {
        Poly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut f = e.clone();
                    f[j] += k;
                    (f, c.clone())
                })
                .collect(),
        }
    }

    /// Euler operator Σ x_j ∂_j.
    pub fn euler(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            let d: u32 = e.iter().sum();
            out.add_term(e.clone(), c * int(d as i64));
        }
        out
    }

    /// Exact quotient by `x_j − x_k` (`plus = false`) or `x_j + x_k` (`plus = true`).
    pub fn div_pair(&self, j: usize, k: usize, plus: bool) -> Result<Self> {
        assert_ne!(j, k);
        // x_j ≡ c·x_k modulo the divisor
        let c = if plus { int(-1) } else { int(1) };
        let mut rem = self.clone();
        let mut quot = Self::zero(self.n);
        loop {
            let top = rem
                .terms
                .iter()
                .filter(|(e, _)| e[j] > 0)
                .max_by_key(|(e, _)| e[j])
                .map(|(e, q)| (e.clone(), q.clone()));
            let Some((e, q)) = top else { break };
            let mut lowered = e.clone();
            lowered[j] -= 1;
            quot.add_term(lowered.clone(), q.clone());
            // rem −= q·x^lowered·(x_j − c·x_k)
            rem.add_term(e, -q.clone());
            let mut shifted = lowered;
            shifted[k] += 1;
            rem.add_term(shifted, q * &c);
        }
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(Error::NonzeroRemainder)
        }
    }

    /// Exact quotient by `x_j`.
    pub fn div_var(&self, j: usize) -> Result<Self> {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            if e[j] == 0 {
                return Err(Error::NonzeroRemainder);
            }
            let mut f = e.clone();
            f[j] -= 1;
            out.add_term(f, c.clone());
        }
        Ok(out)
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        Poly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Substitutes `x_j ↦ x_j²` in every variable.
    pub fn in_squares(&self) -> Self {
        Poly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|a| 2 * a).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        assert_eq!(x.len(), self.n);
        // Cache powers per variable to avoid repeated exponentiation.
        let maxdeg: Vec<u32> = (0..self.n)
            .map(|j| self.terms.keys().map(|e| e[j]).max().unwrap_or(0))
            .collect();
        let powers: Vec<Vec<Rational>> = (0..self.n)
            .map(|j| {
                let mut v = Vec::with_capacity(maxdeg[j] as usize + 1);
                v.push(Rational::one());
                for d in 1..=maxdeg[j] as usize {
                    let next = &v[d - 1] * &x[j];
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (j, &a) in e.iter().enumerate() {
                if a > 0 {
                    t *= &powers[j][a as usize];
                }
            }
            acc += t;
        }
        acc
    }

    pub fn eval_f64(&self, x: &[f64]) -> f64 {
        assert_eq!(x.len(), self.n);
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(x)
                    .fold(to_f64(c), |acc, (&a, &xi)| acc * xi.powi(a as i32))
            })
            .sum()
    }

    /// Coefficients converted once to floats, for repeated evaluation.
    pub fn to_float(&self) -> FloatPoly {
        FloatPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), to_f64(c)))
                .collect(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct FloatPoly {
    n: usize,
    terms: Vec<(Exponent, f64)>,
}

impl FloatPoly {
    pub fn eval(&self, x: &[f64]) -> f64 {
        assert_eq!(x.len(), self.n);
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(x)
                    .fold(*c, |acc, (&a, &xi)| acc * xi.powi(a as i32))
            })
            .sum()
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.n, rhs.n);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        assert_eq!(self.n, rhs.n);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&int(-1))
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.n, rhs.n);
        let mut out = Poly::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", format_rational(c))?;
            for (j, &a) in e.iter().enumerate() {
                match a {
                    0 => {}
                    1 => write!(f, "·x{}", j + 1)?,
                    _ => write!(f, "·x{}^{}", j + 1, a)?,
                }
            }
        }
        Ok(())
    }
}
