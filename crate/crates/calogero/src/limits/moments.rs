use std::cell::RefCell;
use std::collections::HashMap;

use quadrature::double_exponential::integrate;

use crate::error::{Error, Result};
use crate::scalars::{Params, Rational};
use crate::sympoly::{gaussian_moment, FloatPoly, SymPoly};

use super::weights::{ln_one_body, ln_pair, BetaParams};
use super::LimitReport;

const PANEL_TOL: f64 = 1e-11;

/// R = max(4/√ω, 1/α + 120) with α the smaller of ϖ, ϖ′.
pub fn truncation_radius(bp: &BetaParams) -> f64 {
    let alpha = bp.varpi.min(bp.varpi_prime);
    (4.0 / bp.omega().sqrt()).max(1.0 / alpha + 120.0)
}

/// Panel boundaries: width 3/√ω on [−12/√ω, 12/√ω] plus the two tails out to R.
fn breakpoints(bp: &BetaParams) -> Vec<f64> {
    let scale = 1.0 / bp.omega().sqrt();
    let core = 12.0 * scale;
    let r = truncation_radius(bp).max(core + 1.0);
    let mut pts = vec![-r];
    let steps = 8;
    for k in 0..=steps {
        pts.push(-core + 2.0 * core * k as f64 / steps as f64);
    }
    pts.push(r);
    pts
}

fn integrate_panels<F: Fn(f64) -> f64>(f: F, pts: &[f64]) -> Result<f64> {
    let mut total = 0.0;
    for w in pts.windows(2) {
        let out = integrate(&f, w[0], w[1], PANEL_TOL);
        if !out.integral.is_finite() {
            return Err(Error::Quadrature(format!(
                "non-finite panel [{}, {}]",
                w[0], w[1]
            )));
        }
        if out.error_estimate > 1e-7 * out.integral.abs().max(1.0) {
            return Err(Error::Quadrature(format!(
                "panel [{}, {}] error estimate {}",
                w[0], w[1], out.error_estimate
            )));
        }
        total += out.integral;
    }
    Ok(total)
}

/// One-body factors of ln Δ_β keyed by the coordinate's bit pattern; tanh-sinh nodes repeat
/// across the inner integrals and across integrands.
struct WeightCache<'a> {
    bp: &'a BetaParams,
    one_body: RefCell<HashMap<u64, f64>>,
}

impl<'a> WeightCache<'a> {
    fn new(bp: &'a BetaParams) -> Result<Self> {
        bp.validate()?;
        Ok(WeightCache {
            bp,
            one_body: RefCell::new(HashMap::new()),
        })
    }

    fn one_body(&self, t: f64) -> f64 {
        if let Some(&v) = self.one_body.borrow().get(&t.to_bits()) {
            return v;
        }
        let v = ln_one_body(t, self.bp);
        self.one_body.borrow_mut().insert(t.to_bits(), v);
        v
    }

    fn get(&self, x: &[f64]) -> f64 {
        let mut ln: f64 = x.iter().map(|&t| self.one_body(t)).sum();
        if let [a, b] = x {
            ln += ln_pair(*a, *b, self.bp);
        }
        ln.exp()
    }
}

fn weighted_integral(fp: &FloatPoly, weights: &WeightCache) -> Result<f64> {
    let bp = weights.bp;
    let pts = breakpoints(bp);
    let failure: RefCell<Option<Error>> = RefCell::new(None);
    let record = |e: Error| {
        failure.borrow_mut().get_or_insert(e);
        0.0
    };
    let eval = |x: &[f64]| match weights.get(x) {
        w if w == 0.0 => 0.0,
        w => fp.eval(x) * w,
    };
    let value = match bp.n {
        1 => integrate_panels(|x| eval(&[x]), &pts)?,
        2 => integrate_panels(
            |x| integrate_panels(|y| eval(&[x, y]), &pts).unwrap_or_else(record),
            &pts,
        )?,
        _ => return Err(Error::InvalidParams("moment quadrature needs n ≤ 2".into())),
    };
    match failure.into_inner() {
        Some(e) => Err(e),
        None => Ok(value),
    }
}

/// ∫ p Δ_β dx along `ladder` against the exact ∫ p Δ dx; the split uses ϖ and gg₁.
///
/// Errors must shrink along the ladder (until quadrature noise) and end within `rel_tol`.
pub fn moment_convergence(
    p: &SymPoly,
    params: &Params,
    varpi: &Rational,
    gg1: &Rational,
    ladder: &[f64],
    rel_tol: f64,
) -> Result<Vec<LimitReport>> {
    let mut all =
        moment_convergence_batch(std::slice::from_ref(p), params, varpi, gg1, ladder, rel_tol)?;
    Ok(all.pop().unwrap_or_default())
}

/// [`moment_convergence`] for several polynomials, sharing the weight evaluations.
pub fn moment_convergence_batch(
    ps: &[SymPoly],
    params: &Params,
    varpi: &Rational,
    gg1: &Rational,
    ladder: &[f64],
    rel_tol: f64,
) -> Result<Vec<Vec<LimitReport>>> {
    if params.n() > 2 {
        return Err(Error::InvalidParams(
            "moment convergence needs n ≤ 2".into(),
        ));
    }
    let mut targets = Vec::with_capacity(ps.len());
    for p in ps {
        if p.degree().unwrap_or(0) > 6 {
            return Err(Error::InvalidParams(
                "moment convergence needs deg p ≤ 6".into(),
            ));
        }
        if p.n() != params.n() {
            return Err(Error::InvalidParams(
                "polynomial and parameters disagree on n".into(),
            ));
        }
        let target = gaussian_moment(p, params)?.to_f64();
        let scale = if target == 0.0 { 1.0 } else { target.abs() };
        targets.push((target, scale));
    }
    let floats: Vec<FloatPoly> = ps.iter().map(|p| p.poly().to_float()).collect();
    let mut rows: Vec<Vec<LimitReport>> = vec![Vec::with_capacity(ladder.len()); ps.len()];
    for (i, &beta) in ladder.iter().enumerate() {
        let bp = BetaParams::split(params, varpi, gg1, beta)?;
        let cache = WeightCache::new(&bp)?;
        for (k, fp) in floats.iter().enumerate() {
            let (target, scale) = targets[k];
            let err = (weighted_integral(fp, &cache)? - target).abs();
            let mut ok = match rows[k].last() {
                Some(prev) if prev.max_abs_error > 1e-9 * scale => err < prev.max_abs_error,
                _ => true,
            };
            if i + 1 == ladder.len() {
                ok &= err <= rel_tol * scale;
            }
            rows[k].push(LimitReport::new(
                "moment",
                beta,
                err,
                Some(err / (beta * scale)),
                ok,
            ));
        }
    }
    Ok(rows)
}

/// The default split ϖ = ω/2 with all of g₁ carried by gg₁.
pub fn even_split(params: &Params) -> (Rational, Rational) {
    (
        params.omega() / Rational::from_integer(2.into()),
        params.g1().clone(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{int, rat};
    use crate::sympoly::Partition;

    fn unit(n: usize) -> SymPoly {
        SymPoly::constant(n, int(1), false)
    }

    #[test]
    fn one_dim_gaussian() {
        let params = Params::type_a(1, int(0), int(1)).unwrap();
        let (w, g) = even_split(&params);
        let rows = moment_convergence(&unit(1), &params, &w, &g, &[1e-1, 1e-2], 1e-4).unwrap();
        assert!(rows.iter().all(LimitReport::passed), "{rows:?}");
        let x2 = SymPoly::msym(&Partition::new(vec![2]).unwrap(), false);
        let rows = moment_convergence(&x2, &params, &w, &g, &[1e-1, 1e-2], 1e-4).unwrap();
        assert!(rows.iter().all(LimitReport::passed), "{rows:?}");
    }

    #[test]
    fn two_particle_mehta() {
        let params = Params::type_a(2, int(1), int(1)).unwrap();
        let (w, g) = even_split(&params);
        let rows = moment_convergence(&unit(2), &params, &w, &g, &[1e-1, 1e-2], 1e-3).unwrap();
        assert!(rows.iter().all(LimitReport::passed), "{rows:?}");
    }

    #[test]
    fn asymmetric_split_type_b() {
        let params = Params::type_b(1, int(0), int(1), int(1)).unwrap();
        let rows = moment_convergence(
            &unit(1),
            &params,
            &rat(1, 4),
            &rat(1, 2),
            &[1e-1, 1e-2],
            1e-3,
        )
        .unwrap();
        assert!(rows.iter().all(LimitReport::passed), "{rows:?}");
    }

    #[test]
    fn rejects_out_of_scope_inputs() {
        let params = Params::type_a(3, int(1), int(1)).unwrap();
        assert!(moment_convergence(&unit(3), &params, &rat(1, 2), &int(0), &[0.1], 1e-3).is_err());
    }
}
