//! The commuting difference operators D_{r,β} under the real substitution s = iβ.
//!
//! Shifts e^{±(β/i)∂_j} become x_j ↦ x_j ∓ s, and
//! v(z) = 1 − s g₀/z, w^A(z) = 1 + sωz, w^B(z) = (1 − s g₁/z)(1 + sωz).

use num_traits::{One, Zero};
use rand::Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalars::{int, Family, Params, Rational};
use crate::sympoly::{Poly, SymPoly};

/// Arithmetic in which the operator is assembled: plain rationals at a fixed s,
/// or power series in s truncated at a fixed order.
trait Algebra: Sync {
    type E: Clone + Send;
    fn constant(&self, q: Rational) -> Self::E;
    fn s(&self) -> Self::E;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn recip(&self, a: &Self::E) -> Result<Self::E>;

    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E {
        self.add(a, &self.mul(&self.constant(-Rational::one()), b))
    }
    fn scale(&self, a: &Self::E, q: &Rational) -> Self::E {
        self.mul(a, &self.constant(q.clone()))
    }
}

struct AtValue(Rational);

impl Algebra for AtValue {
    type E = Rational;
    fn constant(&self, q: Rational) -> Rational {
        q
    }
    fn s(&self) -> Rational {
        self.0.clone()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn recip(&self, a: &Rational) -> Result<Rational> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(a.recip())
    }
}

/// Power series c₀ + c₁s + ⋯ kept to `len` coefficients.
struct Truncated {
    len: usize,
}

impl Algebra for Truncated {
    type E = Vec<Rational>;
    fn constant(&self, q: Rational) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.len];
        v[0] = q;
        v
    }
    fn s(&self) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.len];
        if self.len > 1 {
            v[1] = Rational::one();
        }
        v
    }
    fn add(&self, a: &Vec<Rational>, b: &Vec<Rational>) -> Vec<Rational> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }
    fn mul(&self, a: &Vec<Rational>, b: &Vec<Rational>) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.len];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate().take(self.len - i) {
                out[i + j] += x * y;
            }
        }
        out
    }
    fn recip(&self, a: &Vec<Rational>) -> Result<Vec<Rational>> {
        series_div(&self.constant(Rational::one()), a, self.len)
    }
}

/// Leading `len` coefficients of num/den as power series; den(0) must be nonzero.
fn series_div(num: &[Rational], den: &[Rational], len: usize) -> Result<Vec<Rational>> {
    let d0 = den
        .first()
        .filter(|d| !d.is_zero())
        .ok_or(Error::DivisionByZero)?;
    let inv = d0.recip();
    let mut out: Vec<Rational> = Vec::with_capacity(len);
    for k in 0..len {
        let mut acc = num.get(k).cloned().unwrap_or_else(Rational::zero);
        for (j, dj) in den.iter().enumerate().take(k + 1).skip(1) {
            acc -= dj * &out[k - j];
        }
        out.push(acc * &inv);
    }
    Ok(out)
}

struct Operator<'a, A: Algebra> {
    alg: &'a A,
    params: &'a Params,
    x: Vec<A::E>,
    s: A::E,
}

impl<'a, A: Algebra> Operator<'a, A> {
    fn new(alg: &'a A, x: &[Rational], params: &'a Params) -> Self {
        Operator {
            alg,
            params,
            x: x.iter().map(|q| alg.constant(q.clone())).collect(),
            s: alg.s(),
        }
    }

    fn one(&self) -> A::E {
        self.alg.constant(Rational::one())
    }

    /// ε x_j as an algebra element.
    fn signed(&self, j: usize, eps: i8) -> A::E {
        if eps >= 0 {
            self.x[j].clone()
        } else {
            self.alg.scale(&self.x[j], &-Rational::one())
        }
    }

    fn v(&self, z: &A::E) -> Result<A::E> {
        let g0 = self.params.g0();
        if g0.is_zero() {
            return Ok(self.one());
        }
        let t = self
            .alg
            .mul(&self.alg.scale(&self.s, g0), &self.alg.recip(z)?);
        Ok(self.alg.sub(&self.one(), &t))
    }

    fn w(&self, z: &A::E) -> Result<A::E> {
        let alg = self.alg;
        let osc = alg.add(
            &self.one(),
            &alg.mul(&alg.scale(&self.s, self.params.omega()), z),
        );
        match self.params.family() {
            Family::A => Ok(osc),
            Family::B => {
                let g1 = self.params.g1();
                if g1.is_zero() {
                    return Ok(osc);
                }
                let t = alg.mul(&alg.scale(&self.s, g1), &alg.recip(z)?);
                Ok(alg.mul(&alg.sub(&self.one(), &t), &osc))
            }
        }
    }

    fn eval_poly(&self, p: &Poly, point: &[A::E]) -> A::E {
        let alg = self.alg;
        let max_deg = p.degree().unwrap_or(0) as usize;
        let powers: Vec<Vec<A::E>> = point
            .iter()
            .map(|xj| {
                let mut pw = vec![self.one()];
                for k in 0..max_deg {
                    let next = alg.mul(&pw[k], xj);
                    pw.push(next);
                }
                pw
            })
            .collect();
        let mut acc = alg.constant(Rational::zero());
        for (exp, c) in p.terms() {
            let mut t = alg.constant(c.clone());
            for (j, &e) in exp.iter().enumerate() {
                if e > 0 {
                    t = alg.mul(&t, &powers[j][e as usize]);
                }
            }
            acc = alg.add(&acc, &t);
        }
        acc
    }

    fn shifted_point(&self, sigma: &[i8]) -> Vec<A::E> {
        self.x
            .iter()
            .zip(sigma)
            .map(|(xj, &e)| match e {
                0 => xj.clone(),
                e if e > 0 => self.alg.sub(xj, &self.s),
                _ => self.alg.add(xj, &self.s),
            })
            .collect()
    }

    fn v_a_factor(&self, sigma: &[i8]) -> Result<A::E> {
        let alg = self.alg;
        let n = sigma.len();
        let mut acc = self.one();
        for j in 0..n {
            match sigma[j] {
                1 => acc = alg.mul(&acc, &self.w(&self.x[j])?),
                -1 => acc = alg.mul(&acc, &self.w(&self.signed(j, -1))?),
                _ => {}
            }
        }
        for j in 0..n {
            for k in 0..n {
                let d = alg.sub(&self.x[j], &self.x[k]);
                match (sigma[j], sigma[k]) {
                    (1, -1) => {
                        acc = alg.mul(&acc, &self.v(&d)?);
                        acc = alg.mul(&acc, &self.v(&alg.sub(&d, &self.s))?);
                    }
                    (1, 0) => acc = alg.mul(&acc, &self.v(&d)?),
                    (0, -1) => acc = alg.mul(&acc, &self.v(&d)?),
                    _ => {}
                }
            }
        }
        Ok(acc)
    }

    fn u_a_factor(&self, tau: &[i8]) -> Result<A::E> {
        let alg = self.alg;
        let mut acc = self.one();
        let n = tau.len();
        for l in 0..n {
            match tau[l] {
                1 => acc = alg.mul(&acc, &self.w(&self.x[l])?),
                -1 => acc = alg.mul(&acc, &self.w(&self.signed(l, -1))?),
                _ => {}
            }
        }
        for l in 0..n {
            for k in 0..n {
                let d = alg.sub(&self.x[l], &self.x[k]);
                match (tau[l], tau[k]) {
                    (1, -1) => {
                        acc = alg.mul(&acc, &self.v(&d)?);
                        let back = alg.add(&alg.sub(&self.x[k], &self.x[l]), &self.s);
                        acc = alg.mul(&acc, &self.v(&back)?);
                    }
                    (1, 0) => acc = alg.mul(&acc, &self.v(&d)?),
                    (0, -1) => acc = alg.mul(&acc, &self.v(&d)?),
                    _ => {}
                }
            }
        }
        Ok(acc)
    }

    /// V^B for `lift`, otherwise the summand of U^B (pair factor v(s − εx − ε'x')).
    fn v_b_factor(&self, sigma: &[i8], lift: bool) -> Result<A::E> {
        let alg = self.alg;
        let n = sigma.len();
        let mut acc = self.one();
        for j in 0..n {
            if sigma[j] != 0 {
                acc = alg.mul(&acc, &self.w(&self.signed(j, sigma[j]))?);
            }
        }
        for j in 0..n {
            for k in j + 1..n {
                match (sigma[j], sigma[k]) {
                    (0, 0) => {}
                    (ej, 0) | (0, ej) => {
                        let (a, b) = if sigma[j] != 0 { (j, k) } else { (k, j) };
                        let ea = self.signed(a, ej);
                        acc = alg.mul(&acc, &self.v(&alg.add(&ea, &self.x[b]))?);
                        acc = alg.mul(&acc, &self.v(&alg.sub(&ea, &self.x[b]))?);
                    }
                    (ej, ek) => {
                        let sum = alg.add(&self.signed(j, ej), &self.signed(k, ek));
                        acc = alg.mul(&acc, &self.v(&sum)?);
                        let shifted = if lift {
                            alg.sub(&sum, &self.s)
                        } else {
                            alg.sub(&self.s, &sum)
                        };
                        acc = alg.mul(&acc, &self.v(&shifted)?);
                    }
                }
            }
        }
        Ok(acc)
    }

    /// U_{K,q}: signed sum over sign patterns supported in K with exactly q nonzero entries.
    fn u_factor(&self, complement: &[usize], q: usize) -> Result<A::E> {
        if q == 0 {
            return Ok(self.one());
        }
        let sub = self.restrict(complement);
        let mut acc = self.alg.constant(Rational::zero());
        for tau in sign_patterns(complement.len(), q) {
            if tau.iter().filter(|&&t| t != 0).count() != q {
                continue;
            }
            let term = match self.params.family() {
                Family::A => sub.u_a_factor(&tau)?,
                Family::B => sub.v_b_factor(&tau, false)?,
            };
            acc = self.alg.add(&acc, &term);
        }
        if q % 2 == 1 {
            acc = self.alg.scale(&acc, &-Rational::one());
        }
        Ok(acc)
    }

    /// The variables indexed by `keep` viewed as a system of their own.
    fn restrict(&self, keep: &[usize]) -> Operator<'a, A> {
        Operator {
            alg: self.alg,
            params: self.params,
            x: keep.iter().map(|&j| self.x[j].clone()).collect(),
            s: self.s.clone(),
        }
    }

    fn apply(&self, p: &Poly, r: usize) -> Result<A::E> {
        self.apply_with(|pt| Ok(self.eval_poly(p, pt)), r)
    }

    /// The operator acting on an arbitrary function given by its values.
    fn apply_with<F: Fn(&[A::E]) -> Result<A::E>>(&self, f: F, r: usize) -> Result<A::E> {
        let n = self.x.len();
        let mut acc = self.alg.constant(Rational::zero());
        for sigma in sign_patterns(n, r) {
            let m = sigma.iter().filter(|&&e| e != 0).count();
            let complement: Vec<usize> = (0..n).filter(|&j| sigma[j] == 0).collect();
            let v = match self.params.family() {
                Family::A => self.v_a_factor(&sigma)?,
                Family::B => self.v_b_factor(&sigma, true)?,
            };
            let u = self.u_factor(&complement, r - m)?;
            let shifted = f(&self.shifted_point(&sigma))?;
            acc = self
                .alg
                .add(&acc, &self.alg.mul(&self.alg.mul(&u, &v), &shifted));
        }
        Ok(acc)
    }
}

/// All vectors in {−1, 0, 1}^n with at most `max_nonzero` nonzero entries, in a fixed order.
fn sign_patterns(n: usize, max_nonzero: usize) -> Vec<Vec<i8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(out.len() * 3);
        for v in &out {
            for e in [0i8, 1, -1] {
                let mut w: Vec<i8> = v.clone();
                w.push(e);
                if w.iter().filter(|&&t| t != 0).count() <= max_nonzero {
                    next.push(w);
                }
            }
        }
        out = next;
    }
    out
}

fn check_inputs(p: &SymPoly, r: usize, x: &[Rational], params: &Params) -> Result<()> {
    let n = params.n();
    if r == 0 || r > n {
        return Err(Error::InvalidParams(format!("r = {r} outside 1..={n}")));
    }
    if p.n() != n || x.len() != n {
        return Err(Error::InvalidParams(format!(
            "dimension mismatch: polynomial in {} variables, point of length {}, n = {n}",
            p.n(),
            x.len()
        )));
    }
    check_point(x, params)
}

/// Rejects points on the hyperplanes where the coefficient functions have poles at s = 0.
pub fn check_point(x: &[Rational], params: &Params) -> Result<()> {
    let n = x.len();
    let b = params.family() == Family::B;
    if b && !params.g1().is_zero() && x.iter().any(|q| q.is_zero()) {
        return Err(Error::SingularPoint("x_j = 0".into()));
    }
    if params.g0().is_zero() {
        return Ok(());
    }
    for j in 0..n {
        for k in j + 1..n {
            if x[j] == x[k] || (b && x[j] == -x[k].clone()) {
                return Err(Error::SingularPoint(format!("x_{} = ±x_{}", j + 1, k + 1)));
            }
            if b && x[j].is_zero() {
                return Err(Error::SingularPoint("x_j = 0".into()));
            }
        }
    }
    Ok(())
}

/// Exact value of (D_{r,β} p)(x) at β = −is.
pub fn difference_eval(
    p: &SymPoly,
    r: usize,
    s: &Rational,
    x: &[Rational],
    params: &Params,
) -> Result<Rational> {
    check_inputs(p, r, x, params)?;
    let alg = AtValue(s.clone());
    Operator::new(&alg, x, params).apply(p.poly(), r)
}

/// The displayed two-term form of D_{1,β}, assembled independently of the general sum.
pub fn difference_r1_direct(
    p: &SymPoly,
    s: &Rational,
    x: &[Rational],
    params: &Params,
) -> Result<Rational> {
    check_inputs(p, 1, x, params)?;
    let n = x.len();
    let g0 = params.g0();
    let v = |z: Rational| -> Result<Rational> {
        if g0.is_zero() {
            return Ok(int(1));
        }
        if z.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(int(1) - s * g0 / z)
    };
    let w = |z: &Rational| -> Result<Rational> {
        let osc = int(1) + s * params.omega() * z;
        match params.family() {
            Family::A => Ok(osc),
            Family::B if params.g1().is_zero() => Ok(osc),
            Family::B => {
                if z.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok((int(1) - s * params.g1() / z) * osc)
            }
        }
    };
    let base = p.poly().eval(x);
    let mut total = Rational::zero();
    for j in 0..n {
        for eps in [1i64, -1] {
            let e = int(eps);
            let xj = &x[j] * &e;
            let mut coeff = w(&xj)?;
            for k in (0..n).filter(|&k| k != j) {
                match params.family() {
                    Family::A => coeff *= v((&x[j] - &x[k]) * &e)?,
                    Family::B => coeff *= v(&xj - &x[k])? * v(&xj + &x[k])?,
                }
            }
            let mut shifted = x.to_vec();
            shifted[j] = &x[j] - s * &e;
            total += coeff * (p.poly().eval(&shifted) - &base);
        }
    }
    Ok(total)
}

/// den(s) = Π(x_a − x_b − s) over ordered pairs (A) or Π(εx_a + ε'x_b − s) over pairs and signs (B).
fn denominator(x: &[Rational], params: &Params) -> Vec<Rational> {
    let mut den = vec![Rational::one()];
    if params.g0().is_zero() {
        return den;
    }
    let mut times_linear = |c: Rational| {
        // multiply by (c − s)
        let mut next = vec![Rational::zero(); den.len() + 1];
        for (i, d) in den.iter().enumerate() {
            next[i] += d * &c;
            next[i + 1] -= d;
        }
        den = next;
    };
    let n = x.len();
    for a in 0..n {
        for b in 0..n {
            match params.family() {
                Family::A if a != b => times_linear(&x[a] - &x[b]),
                Family::B if a < b => {
                    for ea in [1i64, -1] {
                        for eb in [1i64, -1] {
                            times_linear(&x[a] * int(ea) + &x[b] * int(eb));
                        }
                    }
                }
                _ => {}
            }
        }
    }
    den
}

fn horner(c: &[Rational], s: &Rational) -> Rational {
    c.iter()
        .rev()
        .fold(Rational::zero(), |acc, ci| acc * s + ci)
}

/// Monomial coefficients of the polynomial through (nodes, values), by Newton's divided differences.
fn interpolate(nodes: &[Rational], values: &[Rational]) -> Vec<Rational> {
    let m = nodes.len();
    let mut dd = values.to_vec();
    for level in 1..m {
        for i in (level..m).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&nodes[i] - &nodes[i - level]);
        }
    }
    let mut coeffs = vec![Rational::zero(); m];
    for i in (0..m).rev() {
        // coeffs ← coeffs·(s − nodes[i]) + dd[i]
        let mut next = vec![Rational::zero(); m];
        for k in 0..m {
            if coeffs[k].is_zero() {
                continue;
            }
            if k + 1 < m {
                next[k + 1] += &coeffs[k];
            }
            next[k] -= &coeffs[k] * &nodes[i];
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    coeffs
}

/// Coefficients of s⁰, …, s^{order} in (D_{r,s} p)(x), by exact interpolation of den(s)·(D_{r,s}p)(x).
pub fn difference_series_to(
    p: &SymPoly,
    r: usize,
    x: &[Rational],
    params: &Params,
    order: usize,
) -> Result<Vec<Rational>> {
    check_inputs(p, r, x, params)?;
    let n = params.n();
    let den = denominator(x, params);
    let bound = den.len() - 1 + 2 * n * (n - 1) + 2 * n + p.degree().unwrap_or(0) as usize;
    let wanted = bound + 2;
    let mut nodes = Vec::with_capacity(wanted);
    let mut k = 0i64;
    while nodes.len() < wanted {
        let s = Rational::new(k.into(), 7.into());
        if !horner(&den, &s).is_zero() {
            nodes.push(s);
        }
        k += 1;
    }
    let values: Vec<Rational> = nodes
        .par_iter()
        .map(|s| -> Result<Rational> {
            let alg = AtValue(s.clone());
            let d = Operator::new(&alg, x, params).apply(p.poly(), r)?;
            Ok(d * horner(&den, s))
        })
        .collect::<Result<_>>()?;
    let numer = interpolate(&nodes, &values);
    if !numer[wanted - 1].is_zero() {
        return Err(Error::Internal(format!(
            "interpolation degree exceeded the bound {bound}"
        )));
    }
    series_div(&numer, &den, order + 1)
}

/// Coefficients of s⁰, …, s^{2r}; in β the s^{2r} coefficient carries the sign (−1)^r.
pub fn difference_series(
    p: &SymPoly,
    r: usize,
    x: &[Rational],
    params: &Params,
) -> Result<Vec<Rational>> {
    difference_series_to(p, r, x, params, 2 * r)
}

/// The same coefficients computed by truncated power-series arithmetic in s.
pub fn difference_series_truncated(
    p: &SymPoly,
    r: usize,
    x: &[Rational],
    params: &Params,
    order: usize,
) -> Result<Vec<Rational>> {
    check_inputs(p, r, x, params)?;
    let alg = Truncated { len: order + 1 };
    Operator::new(&alg, x, params).apply(p.poly(), r)
}

/// A point with small-height rational coordinates away from the singular hyperplanes.
pub fn sample_point<R: Rng>(rng: &mut R, params: &Params) -> Vec<Rational> {
    loop {
        let x: Vec<Rational> = (0..params.n())
            .map(|_| {
                Rational::new(
                    rng.gen_range(-9i64..=9).into(),
                    rng.gen_range(1i64..=5).into(),
                )
            })
            .collect();
        let g1 = match params.family() {
            Family::A => int(0),
            Family::B => int(1),
        };
        let strict = Params::new(
            params.family(),
            params.n(),
            int(1),
            g1,
            params.omega().clone(),
        )
        .expect("valid parameters");
        if check_point(&x, &strict).is_ok() {
            return x;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::construct_monic;
    use crate::operators::{difference_eigenvalue, eigenvalue_e};
    use crate::scalars::rat;
    use crate::sympoly::Partition;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn lam(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn one_variable_linear() {
        let omega = rat(3, 2);
        let a = Params::type_a(1, int(0), omega.clone()).unwrap();
        let x = SymPoly::from_poly(Poly::var(1, 0), false).unwrap();
        let pt = [rat(2, 3)];
        let s = rat(1, 5);
        let val = difference_eval(&x, 1, &s, &pt, &a).unwrap();
        assert_eq!(val, -int(2) * &omega * &s * &s * &pt[0]);
        let series = difference_series(&x, 1, &pt, &a).unwrap();
        assert_eq!(series, vec![int(0), int(0), -int(2) * &omega * &pt[0]]);
    }

    #[test]
    fn constants_vanish() {
        let a = Params::type_a(2, int(1), int(1)).unwrap();
        let b = Params::type_b(2, rat(1, 2), int(1), int(1)).unwrap();
        let pt = [rat(1, 3), int(2)];
        for params in [&a, &b] {
            let one = SymPoly::constant(2, int(1), params.is_even());
            assert!(difference_eval(&one, 1, &rat(1, 7), &pt, params)
                .unwrap()
                .is_zero());
        }
    }

    #[test]
    fn r1_matches_direct_form() {
        let a = Params::type_a(2, int(1), int(1)).unwrap();
        let m10 = SymPoly::msym(&lam(&[1, 0]), false);
        let pt = [int(1), int(2)];
        let s = rat(1, 7);
        assert_eq!(
            difference_eval(&m10, 1, &s, &pt, &a).unwrap(),
            difference_r1_direct(&m10, &s, &pt, &a).unwrap()
        );
        let b = Params::type_b(3, rat(3, 2), rat(1, 2), rat(2, 5)).unwrap();
        let q = SymPoly::msym(&lam(&[2, 1, 0]), true);
        let pt = [rat(1, 2), rat(-4, 3), int(3)];
        assert_eq!(
            difference_eval(&q, 1, &s, &pt, &b).unwrap(),
            difference_r1_direct(&q, &s, &pt, &b).unwrap()
        );
    }

    #[test]
    fn interpolation_agrees_with_series() {
        let b = Params::type_b(2, int(1), rat(1, 2), int(1)).unwrap();
        let q = SymPoly::msym(&lam(&[1, 1]), true);
        let pt = [rat(1, 2), rat(5, 3)];
        let via_nodes = difference_series_to(&q, 2, &pt, &b, 5).unwrap();
        let via_series = difference_series_truncated(&q, 2, &pt, &b, 5).unwrap();
        assert_eq!(via_nodes, via_series);
    }

    #[test]
    fn leading_term_is_eigenvalue() {
        let a = Params::type_a(2, int(1), int(1)).unwrap();
        let lambda = lam(&[1, 1]);
        let q = construct_monic(&lambda, &a).unwrap().poly;
        let pt = [int(1), int(2)];
        let series = difference_series(&q, 2, &pt, &a).unwrap();
        assert!(series[..4].iter().all(|c| c.is_zero()));
        let e = difference_eigenvalue(2, &lambda, &a).unwrap();
        assert_eq!(series[4], &e * q.eval(&pt));
        assert_ne!(e, eigenvalue_e(2, &lambda, &a).unwrap());
    }

    fn commutator(
        r1: usize,
        r2: usize,
        q: &SymPoly,
        s: &Rational,
        x: &[Rational],
        params: &Params,
    ) -> Rational {
        let alg = AtValue(s.clone());
        let composed = |outer: usize, inner: usize| {
            let f = |y: &[Rational]| Operator::new(&alg, y, params).apply(q.poly(), inner);
            Operator::new(&alg, x, params).apply_with(f, outer).unwrap()
        };
        composed(r1, r2) - composed(r2, r1)
    }

    #[test]
    fn operators_commute_at_finite_step() {
        let a = Params::type_a(3, int(2), rat(1, 3)).unwrap();
        let q = SymPoly::msym(&lam(&[3, 1, 0]), false);
        let x = [rat(1, 2), rat(-4, 3), int(3)];
        assert!(commutator(1, 2, &q, &rat(1, 5), &x, &a).is_zero());
        let b = Params::type_b(2, rat(3, 2), rat(1, 2), rat(2, 5)).unwrap();
        let q = SymPoly::msym(&lam(&[2, 1]), true);
        let x = [rat(1, 2), rat(-4, 3)];
        assert!(commutator(1, 2, &q, &rat(1, 5), &x, &b).is_zero());
    }

    #[test]
    fn sampled_points_are_admissible() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let b = Params::type_b(3, int(1), int(1), int(1)).unwrap();
        for _ in 0..20 {
            assert!(check_point(&sample_point(&mut rng, &b), &b).is_ok());
        }
    }
}
