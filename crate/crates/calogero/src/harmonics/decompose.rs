use num_traits::Zero;
use serde::Serialize;

use super::spherical::{
    apply_l, coordinates, deformation_degree, expected_harmonic_dimension, homogeneous_labels,
    r_squared, radial_in_x, radial_poly,
};
use crate::construct::{construct_monic, jack_monic, SCHEMA_VERSION};
use crate::error::{Error, Result};
use crate::linalg::solve;
use crate::scalars::{format_rational, int, pochhammer, rat, Family, Params, Rational};
use crate::sympoly::{Partition, Poly, SymPoly, SymPolyJson};
use crate::verify::Check;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarmonicTerm {
    pub m: u32,
    /// Coefficients of R_m in t = r², constant term first.
    pub radial: Vec<Rational>,
    pub harmonic: SymPoly,
}

/// p_λ = Σ_m R_m(r) Y_m with L^C Y_m = 0; only nonzero Y_m are kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarmonicDecomposition {
    pub params: Params,
    pub lambda: Partition,
    pub terms: Vec<HarmonicTerm>,
}

#[derive(Debug, Clone, Serialize)]
pub struct HarmonicTermJson {
    pub m: u32,
    pub radial: Vec<String>,
    pub harmonic: SymPolyJson,
}

#[derive(Debug, Clone, Serialize)]
pub struct HarmonicDecompositionJson {
    #[serde(rename = "schemaVersion")]
    pub schema_version: u32,
    pub family: String,
    pub n: usize,
    pub g0: String,
    pub g1: String,
    pub omega: String,
    pub lambda: Vec<u32>,
    pub terms: Vec<HarmonicTermJson>,
}

impl HarmonicDecomposition {
    pub fn to_json(&self) -> HarmonicDecompositionJson {
        HarmonicDecompositionJson {
            schema_version: SCHEMA_VERSION,
            family: self.params.family().to_string(),
            n: self.params.n(),
            g0: format_rational(self.params.g0()),
            g1: format_rational(self.params.g1()),
            omega: format_rational(self.params.omega()),
            lambda: self.lambda.parts().to_vec(),
            terms: self
                .terms
                .iter()
                .map(|t| HarmonicTermJson {
                    m: t.m,
                    radial: t.radial.iter().map(format_rational).collect(),
                    harmonic: t.harmonic.to_json(),
                })
                .collect(),
        }
    }

    /// Σ_m R_m(r) Y_m as a polynomial in x.
    pub fn reconstruct(&self) -> Poly {
        let n = self.params.n();
        let mut acc = Poly::zero(n);
        for t in &self.terms {
            acc = &acc + &(&radial_in_x(&t.radial, n) * t.harmonic.poly());
        }
        acc
    }

    /// Σ_m r^{2m} Y_m, which should be the Jack top term.
    pub fn leading_part(&self) -> Poly {
        let n = self.params.n();
        let r2 = r_squared(n);
        let mut acc = Poly::zero(n);
        for t in &self.terms {
            acc = &acc + &(&r2.pow(t.m) * t.harmonic.poly());
        }
        acc
    }

    pub fn harmonic(&self, m: u32) -> Option<&SymPoly> {
        self.terms.iter().find(|t| t.m == m).map(|t| &t.harmonic)
    }
}

/// Natural degree of Y_m: |λ|−2m (A) or |λ|−m (B).
fn harmonic_degree(lambda: &Partition, m: u32, params: &Params) -> Option<u32> {
    let w = lambda.weight();
    match params.family() {
        Family::A => w.checked_sub(2 * m),
        Family::B => w.checked_sub(m),
    }
}

fn jack_top(lambda: &Partition, params: &Params) -> Result<SymPoly> {
    let jack = jack_monic(lambda, params.g0())?;
    Ok(if params.is_even() {
        jack.in_squares()
    } else {
        jack
    })
}

/// Splits a homogeneous F of x-degree d as F = Y + r²Q with L^C Y = 0.
fn split_harmonic(f: &SymPoly, d: u32, params: &Params) -> Result<(SymPoly, SymPoly)> {
    let n = params.n();
    let even = params.is_even();
    if d < 2 {
        return Ok((f.clone(), SymPoly::zero(n, even)));
    }
    let labels = homogeneous_labels(d - 2, params);
    let r2 = r_squared(n);
    let lifted: Vec<SymPoly> = labels
        .iter()
        .map(|mu| SymPoly::from_poly(&r2 * SymPoly::msym(mu, even).poly(), even))
        .collect::<Result<_>>()?;
    let columns: Vec<Vec<Rational>> = lifted
        .iter()
        .map(|p| coordinates(&apply_l(p, params)?, &labels))
        .collect::<Result<_>>()?;
    let matrix: Vec<Vec<Rational>> = (0..labels.len())
        .map(|i| columns.iter().map(|c| c[i].clone()).collect())
        .collect();
    let rhs = coordinates(&apply_l(f, params)?, &labels)?;
    let q = solve(matrix, rhs)
        .map_err(|e| Error::Internal(format!("harmonic split is not unique: {e}")))?;
    let mut quotient = SymPoly::zero(n, even);
    let mut lifted_sum = SymPoly::zero(n, even);
    for ((mu, c), l) in labels.iter().zip(&q).zip(&lifted) {
        quotient = quotient.add(&SymPoly::msym(mu, even).scale(c));
        lifted_sum = lifted_sum.add(&l.scale(c));
    }
    Ok((f.sub(&lifted_sum), quotient))
}

/// Decomposes p_λ into radial polynomials times generalized spherical harmonics.
pub fn decompose_harmonic(lambda: &Partition, params: &Params) -> Result<HarmonicDecomposition> {
    let p = construct_monic(lambda, params)?;
    let mut f = jack_top(lambda, params)?;
    let mut d = match params.family() {
        Family::A => lambda.weight(),
        Family::B => 2 * lambda.weight(),
    };
    let mut terms = Vec::new();
    let mut m = 0;
    loop {
        let (y, q) = split_harmonic(&f, d, params)?;
        if !apply_l(&y, params)?.is_zero() {
            return Err(Error::Internal(format!(
                "component m = {m} of {lambda} is not harmonic"
            )));
        }
        if !y.is_zero() {
            let l = harmonic_degree(lambda, m, params).expect("degree stays nonnegative");
            terms.push(HarmonicTerm {
                m,
                radial: radial_poly(m, l, params),
                harmonic: y,
            });
        }
        if d < 2 {
            break;
        }
        f = q;
        d -= 2;
        m += 1;
    }
    let dec = HarmonicDecomposition {
        params: params.clone(),
        lambda: lambda.clone(),
        terms,
    };
    if &dec.reconstruct() != p.poly.poly() {
        return Err(Error::Internal(format!(
            "harmonic decomposition of {lambda} does not reconstruct p_λ"
        )));
    }
    Ok(dec)
}

/// L^j applied j times.
fn l_power(p: &SymPoly, j: u32, params: &Params) -> Result<SymPoly> {
    let mut acc = p.clone();
    for _ in 0..j {
        acc = apply_l(&acc, params)?;
    }
    Ok(acc)
}

fn nonzero(q: Rational) -> Result<Rational> {
    if q.is_zero() {
        return Err(Error::NonGeneric("vanishing Pochhammer denominator".into()));
    }
    Ok(q)
}

/// Y_m from the projection Π applied to the Jack top term.
pub fn dunkl_projection(lambda: &Partition, m: u32, params: &Params) -> Result<SymPoly> {
    let k = harmonic_degree(lambda, m, params)
        .ok_or_else(|| Error::InvalidParams(format!("m = {m} too large for {lambda}")))?;
    let n = params.n();
    let d = deformation_degree(params);
    let half_n = rat(n as i64, 2);
    let kx = int(super::spherical::x_degree(k, params) as i64);
    let four = int(4);
    let fact = |j: u32| Rational::from_integer(crate::scalars::factorial(j));

    let jack = jack_top(lambda, params)?;
    let lm = l_power(&jack, m, params)?;
    let outer = nonzero(four.pow(m as i32) * fact(m) * pochhammer(&(&half_n + &d + &kx), m))?;

    let j_max = match params.family() {
        Family::A => k / 2,
        Family::B => k,
    };
    let base = -&half_n - &d - &kx + int(2);
    let r2 = r_squared(n);
    let mut acc = SymPoly::zero(n, params.is_even());
    let mut lj = lm;
    for j in 0..=j_max {
        let den = nonzero(four.pow(j as i32) * fact(j) * pochhammer(&base, j))?;
        let term = SymPoly::from_poly(&r2.pow(j) * lj.poly(), params.is_even())?;
        acc = acc.add(&term.scale(&den.recip()));
        if j < j_max {
            lj = apply_l(&lj, params)?;
        }
    }
    Ok(acc.scale(&outer.recip()))
}

/// Decomposition, harmonicity, leading-part identity, dimension bounds and the projection
/// cross-check for one λ. The projection comparison is reported in `projection_agrees`.
#[derive(Debug, Clone)]
pub struct HarmonicsReport {
    pub check: Check,
    pub projection_agrees: bool,
}

pub fn harmonics_check(lambda: &Partition, params: &Params) -> Result<HarmonicsReport> {
    let dec = decompose_harmonic(lambda, params)?;
    let mut problems = Vec::new();
    if dec.leading_part() != *jack_top(lambda, params)?.poly() {
        problems.push("leading part differs from the Jack polynomial".to_string());
    }
    for t in &dec.terms {
        let l = harmonic_degree(lambda, t.m, params).expect("term degrees are valid");
        if expected_harmonic_dimension(l, params) == 0 {
            problems.push(format!("nonzero component in H_{l}, which has dimension 0"));
        }
    }
    let m_max = match params.family() {
        Family::A => lambda.weight() / 2,
        Family::B => lambda.weight(),
    };
    let mut projection_agrees = true;
    for m in 0..=m_max {
        let y = dunkl_projection(lambda, m, params)?;
        let expected = dec
            .harmonic(m)
            .cloned()
            .unwrap_or_else(|| SymPoly::zero(params.n(), params.is_even()));
        if y != expected {
            projection_agrees = false;
        }
    }
    let check = if problems.is_empty() {
        Check::pass()
    } else {
        Check::fail(0, problems.join("; "))
    };
    Ok(HarmonicsReport {
        check,
        projection_agrees,
    })
}
