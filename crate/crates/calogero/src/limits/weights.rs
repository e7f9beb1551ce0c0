use crate::error::{Error, Result};
use crate::scalars::{to_f64, Family, Params, Rational};

use super::gamma::{ln_gamma_modulus_limit, ln_gamma_ratio_limit};

/// Smallest β accepted by the float layer.
pub const BETA_FLOOR: f64 = 1e-4;

/// Parameters of the β-deformed weights; ω = ϖ + ϖ′ and g₁ = gg₁ + gg₁′ in the limit.
#[derive(Debug, Clone, PartialEq)]
pub struct BetaParams {
    pub family: Family,
    pub n: usize,
    pub g0: f64,
    pub varpi: f64,
    pub varpi_prime: f64,
    pub gg1: f64,
    pub gg1_prime: f64,
    pub beta: f64,
}

impl BetaParams {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidParams(msg.to_string()));
        if self.n == 0 {
            return bad("n must be positive");
        }
        if !(self.varpi > 0.0 && self.varpi_prime > 0.0) {
            return bad("varpi and varpi' must be positive");
        }
        if !(self.g0 >= 0.0 && self.gg1 >= 0.0 && self.gg1_prime >= 0.0) {
            return bad("couplings must be nonnegative");
        }
        if self.family == Family::A && (self.gg1 != 0.0 || self.gg1_prime != 0.0) {
            return bad("gg1 is only meaningful for family B");
        }
        if !(self.beta >= BETA_FLOOR && self.beta < 1.0) {
            return bad("beta must lie in [1e-4, 1)");
        }
        Ok(())
    }

    /// Splits exact parameters as ω = ϖ + (ω − ϖ) and g₁ = gg₁ + (g₁ − gg₁).
    pub fn split(params: &Params, varpi: &Rational, gg1: &Rational, beta: f64) -> Result<Self> {
        let bp = BetaParams {
            family: params.family(),
            n: params.n(),
            g0: to_f64(params.g0()),
            varpi: to_f64(varpi),
            varpi_prime: to_f64(&(params.omega() - varpi)),
            gg1: to_f64(gg1),
            gg1_prime: to_f64(&(params.g1() - gg1)),
            beta,
        };
        bp.validate()?;
        Ok(bp)
    }

    pub fn with_beta(&self, beta: f64) -> Self {
        BetaParams {
            beta,
            ..self.clone()
        }
    }

    pub fn omega(&self) -> f64 {
        self.varpi + self.varpi_prime
    }

    pub fn g1(&self) -> f64 {
        self.gg1 + self.gg1_prime
    }
}

/// ln Δ^C_β(x), with every Γ factor paired with its normalization.
pub fn ln_weight_beta(x: &[f64], bp: &BetaParams) -> Result<f64> {
    bp.validate()?;
    if x.len() != bp.n {
        return Err(Error::InvalidParams(format!(
            "point has {} coordinates, expected {}",
            x.len(),
            bp.n
        )));
    }
    let mut acc = 0.0;
    for (j, &xj) in x.iter().enumerate() {
        acc += ln_one_body(xj, bp);
        for &xk in &x[j + 1..] {
            acc += ln_pair(xj, xk, bp);
        }
    }
    Ok(acc)
}

/// The factors of ln Δ^C_β that depend on one coordinate.
pub(crate) fn ln_one_body(xj: f64, bp: &BetaParams) -> f64 {
    let beta = bp.beta;
    let mut acc = 2.0 * ln_gamma_modulus_limit(bp.varpi, xj, beta);
    acc += 2.0 * ln_gamma_modulus_limit(bp.varpi_prime, xj, beta);
    if bp.family == Family::B {
        acc += 2.0 * ln_gamma_ratio_limit(bp.gg1, 0.0, xj, beta);
        acc += 2.0 * ln_gamma_ratio_limit(bp.gg1_prime, 0.5, xj, beta);
    }
    acc
}

/// The factors of ln Δ^C_β coupling x_j and x_k.
pub(crate) fn ln_pair(xj: f64, xk: f64, bp: &BetaParams) -> f64 {
    let mut acc = 2.0 * ln_gamma_ratio_limit(bp.g0, 0.0, xj - xk, bp.beta);
    if bp.family == Family::B {
        acc += 2.0 * ln_gamma_ratio_limit(bp.g0, 0.0, xj + xk, bp.beta);
    }
    acc
}

pub fn weight_beta(x: &[f64], bp: &BetaParams) -> Result<f64> {
    Ok(ln_weight_beta(x, bp)?.exp())
}

/// Δ^A(x) or Δ^B(x) at ω = ϖ + ϖ′, g₁ = gg₁ + gg₁′.
pub fn weight_limit(x: &[f64], bp: &BetaParams) -> f64 {
    let omega = bp.omega();
    let mut ln = -omega * x.iter().map(|t| t * t).sum::<f64>();
    for (j, &xj) in x.iter().enumerate() {
        if bp.family == Family::B && bp.g1() != 0.0 {
            ln += 2.0 * bp.g1() * xj.abs().ln();
        }
        if bp.g0 != 0.0 {
            for &xk in &x[j + 1..] {
                ln += 2.0 * bp.g0 * (xj - xk).abs().ln();
                if bp.family == Family::B {
                    ln += 2.0 * bp.g0 * (xj + xk).abs().ln();
                }
            }
        }
    }
    ln.exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_dim(beta: f64) -> BetaParams {
        BetaParams {
            family: Family::A,
            n: 1,
            g0: 0.0,
            varpi: 0.5,
            varpi_prime: 0.5,
            gg1: 0.0,
            gg1_prime: 0.0,
            beta,
        }
    }

    #[test]
    fn approaches_gaussian() {
        let target = (-0.25f64).exp();
        let mut last = f64::INFINITY;
        for beta in [1e-1, 1e-2, 1e-3] {
            let e = (weight_beta(&[0.5], &one_dim(beta)).unwrap() - target).abs();
            assert!(e < last);
            last = e;
        }
        assert!(last < 1e-6);
        assert!((weight_limit(&[0.5], &one_dim(0.1)) - target).abs() < 1e-15);
    }

    #[test]
    fn laguerre_target() {
        let bp = BetaParams {
            family: Family::B,
            gg1: 1.0,
            ..one_dim(1e-3)
        };
        let x: f64 = 0.8;
        let target = x * x * (-x * x).exp();
        assert!((weight_limit(&[x], &bp) - target).abs() < 1e-15);
        assert!((weight_beta(&[x], &bp).unwrap() / target - 1.0).abs() < 1e-3);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(weight_beta(&[0.0], &one_dim(1e-5)).is_err());
        assert!(weight_beta(
            &[0.0],
            &BetaParams {
                varpi_prime: 0.0,
                ..one_dim(0.1)
            }
        )
        .is_err());
        assert!(weight_beta(&[0.0, 1.0], &one_dim(0.1)).is_err());
    }
}
