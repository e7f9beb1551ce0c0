use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::partition::Partition;
use super::poly::Poly;
use crate::error::{Error, Result};
use crate::scalars::{factorial, Params, Rational};

/// Symmetric polynomial; `even` marks polynomials in the squared variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly {
    poly: Poly,
    even: bool,
}

/// Orbit size n!/Π(multiplicities)! of an exponent vector.
fn orbit_size(sorted: &[u32]) -> usize {
    let mut mult: BTreeMap<u32, u32> = BTreeMap::new();
    for &a in sorted {
        *mult.entry(a).or_default() += 1;
    }
    let denom = mult
        .values()
        .fold(num_bigint::BigInt::one(), |acc, &m| acc * factorial(m));
    let size = factorial(sorted.len() as u32) / denom;
    use num_traits::ToPrimitive;
    size.to_usize().expect("orbit size fits in usize")
}

fn distinct_permutations(parts: &[u32]) -> Vec<Vec<u32>> {
    let mut v = parts.to_vec();
    v.sort_unstable();
    let mut out = vec![v.clone()];
    // Lexicographic next-permutation walk over the multiset.
    loop {
        let Some(i) = (0..v.len().saturating_sub(1))
            .rev()
            .find(|&i| v[i] < v[i + 1])
        else {
            break;
        };
        let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
        v.swap(i, j);
        v[i + 1..].reverse();
        out.push(v.clone());
    }
    out
}

impl SymPoly {
    /// Wraps a polynomial after checking symmetry (and evenness if requested).
    pub fn from_poly(poly: Poly, even: bool) -> Result<Self> {
        let s = SymPoly { poly, even };
        s.expand_in_msym()?;
        Ok(s)
    }

    pub fn zero(n: usize, even: bool) -> Self {
        SymPoly {
            poly: Poly::zero(n),
            even,
        }
    }

    pub fn constant(n: usize, q: Rational, even: bool) -> Self {
        SymPoly {
            poly: Poly::constant(n, q),
            even,
        }
    }

    /// m_λ, or m_{2λ} when `even`.
    pub fn msym(lambda: &Partition, even: bool) -> Self {
        let parts: Vec<u32> = if even {
            lambda.doubled()
        } else {
            lambda.parts().to_vec()
        };
        let mut poly = Poly::zero(lambda.n());
        for e in distinct_permutations(&parts) {
            poly.add_term(e, Rational::one());
        }
        SymPoly { poly, even }
    }

    pub fn from_msym(n: usize, coeffs: &BTreeMap<Partition, Rational>, even: bool) -> Self {
        let mut poly = Poly::zero(n);
        for (mu, c) in coeffs {
            poly = &poly + &Self::msym(mu, even).poly.scale(c);
        }
        SymPoly { poly, even }
    }

    /// Unique coefficients c_μ with p = Σ c_μ m_μ (or m_{2μ}).
    pub fn expand_in_msym(&self) -> Result<BTreeMap<Partition, Rational>> {
        let mut orbits: BTreeMap<Vec<u32>, (usize, Rational)> = BTreeMap::new();
        for (e, c) in self.poly.terms() {
            if self.even && e.iter().any(|a| a % 2 == 1) {
                return Err(Error::NotEven);
            }
            let mut key = e.clone();
            key.sort_unstable_by(|a, b| b.cmp(a));
            match orbits.get_mut(&key) {
                None => {
                    orbits.insert(key, (1, c.clone()));
                }
                Some((count, c0)) => {
                    if c0 != c {
                        return Err(Error::Asymmetric);
                    }
                    *count += 1;
                }
            }
        }
        let mut out = BTreeMap::new();
        for (key, (count, c)) in orbits {
            if count != orbit_size(&key) {
                return Err(Error::Asymmetric);
            }
            let parts = if self.even {
                key.iter().map(|a| a / 2).collect()
            } else {
                key
            };
            out.insert(Partition::new(parts)?, c);
        }
        Ok(out)
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn into_poly(self) -> Poly {
        self.poly
    }

    pub fn n(&self) -> usize {
        self.poly.n()
    }

    pub fn even(&self) -> bool {
        self.even
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn degree(&self) -> Option<u32> {
        self.poly.degree()
    }

    pub fn add(&self, other: &SymPoly) -> SymPoly {
        SymPoly {
            poly: &self.poly + &other.poly,
            even: self.even && other.even,
        }
    }

    pub fn sub(&self, other: &SymPoly) -> SymPoly {
        SymPoly {
            poly: &self.poly - &other.poly,
            even: self.even && other.even,
        }
    }

    pub fn mul(&self, other: &SymPoly) -> SymPoly {
        SymPoly {
            poly: &self.poly * &other.poly,
            even: self.even && other.even,
        }
    }

    pub fn scale(&self, q: &Rational) -> SymPoly {
        SymPoly {
            poly: self.poly.scale(q),
            even: self.even,
        }
    }

    pub fn homogeneous_part(&self, d: u32) -> SymPoly {
        SymPoly {
            poly: self.poly.homogeneous_part(d),
            even: self.even,
        }
    }

    /// `p(x_1², …, x_n²)`, flagged even.
    pub fn in_squares(&self) -> SymPoly {
        SymPoly {
            poly: self.poly.in_squares(),
            even: true,
        }
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        self.poly.eval(x)
    }

    /// Leading msym coefficient with respect to the graded order.
    pub fn leading(&self) -> Option<(Partition, Rational)> {
        self.expand_in_msym()
            .ok()?
            .into_iter()
            .max_by(|a, b| a.0.graded_cmp(&b.0))
    }

    pub fn to_json(&self) -> SymPolyJson {
        let msym = self
            .expand_in_msym()
            .expect("SymPoly invariant")
            .into_iter()
            .rev()
            .map(|(mu, coeff)| MsymEntry {
                mu: mu.parts().to_vec(),
                coeff,
            })
            .collect();
        let terms = self
            .poly
            .terms()
            .rev()
            .map(|(e, c)| TermEntry {
                exp: e.clone(),
                coeff: c.clone(),
            })
            .collect();
        SymPolyJson {
            n: self.n(),
            even: self.even,
            msym,
            terms,
        }
    }
}

/// Elementary symmetric function e_r(x), or (−ω)^r e_r(x²) for family B.
pub fn elementary_sym(r: usize, params: &Params) -> Result<SymPoly> {
    let n = params.n();
    if r == 0 || r > n {
        return Err(Error::InvalidParams(format!("r = {r} outside 1..={n}")));
    }
    let mut parts = vec![1u32; r];
    parts.resize(n, 0);
    let lambda = Partition::new(parts)?;
    let even = params.is_even();
    let m = SymPoly::msym(&lambda, even);
    if even {
        let factor = crate::scalars::pow_i(&-params.omega().clone(), r as i32);
        Ok(m.scale(&factor))
    } else {
        Ok(m)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MsymEntry {
    pub mu: Vec<u32>,
    #[serde(with = "crate::scalars::serde_str")]
    pub coeff: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermEntry {
    pub exp: Vec<u32>,
    #[serde(with = "crate::scalars::serde_str")]
    pub coeff: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymPolyJson {
    pub n: usize,
    pub even: bool,
    pub msym: Vec<MsymEntry>,
    pub terms: Vec<TermEntry>,
}

impl SymPolyJson {
    pub fn to_sympoly(&self) -> Result<SymPoly> {
        let mut coeffs = BTreeMap::new();
        for e in &self.msym {
            if e.mu.len() != self.n {
                return Err(Error::InvalidParams("msym entry has wrong length".into()));
            }
            let c: &mut Rational = coeffs
                .entry(Partition::new(e.mu.clone())?)
                .or_insert_with(Rational::zero);
            *c += &e.coeff;
        }
        Ok(SymPoly::from_msym(self.n, &coeffs, self.even))
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Ok(map) = self.expand_in_msym() else {
            return write!(f, "{}", self.poly);
        };
        if map.is_empty() {
            return write!(f, "0");
        }
        let m = if self.even { "m2" } else { "m" };
        let parts: Vec<String> = map
            .iter()
            .rev()
            .map(|(mu, c)| format!("{}·{m}{mu}", crate::scalars::format_rational(c)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
