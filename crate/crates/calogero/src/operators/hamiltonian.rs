use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{eigenvalue_e, ground_energy};
use crate::construct::construct_monic;
use crate::error::{Error, Result};
use crate::scalars::{to_f64, Family, Params};
use crate::sympoly::{FloatPoly, Partition};

/// ψ_λ = (Δ^C)^{1/2} p_λ^C in floating point, with the ingredients of H₁ precomputed.
pub struct Wavefunction {
    family: Family,
    g0: f64,
    g1: f64,
    omega: f64,
    poly: FloatPoly,
    energy: f64,
    ground: f64,
}

impl Wavefunction {
    pub fn new(lambda: &Partition, params: &Params) -> Result<Self> {
        let p = construct_monic(lambda, params)?;
        Ok(Wavefunction {
            family: params.family(),
            g0: to_f64(params.g0()),
            g1: to_f64(params.g1()),
            omega: to_f64(params.omega()),
            poly: p.poly.poly().to_float(),
            energy: to_f64(&eigenvalue_e(1, lambda, params)?),
            ground: to_f64(&ground_energy(params)),
        })
    }

    pub fn eigenvalue(&self) -> f64 {
        self.energy
    }

    pub fn polynomial(&self, x: &[f64]) -> f64 {
        self.poly.eval(x)
    }

    pub fn sqrt_weight(&self, x: &[f64]) -> f64 {
        let n = x.len();
        let mut log = -0.5 * self.omega * x.iter().map(|t| t * t).sum::<f64>();
        for j in 0..n {
            for k in j + 1..n {
                log += self.g0 * (x[j] - x[k]).abs().ln();
                if self.family == Family::B {
                    log += self.g0 * (x[j] + x[k]).abs().ln();
                }
            }
            if self.family == Family::B && self.g1 != 0.0 {
                log += self.g1 * x[j].abs().ln();
            }
        }
        log.exp()
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        self.sqrt_weight(x) * self.polynomial(x)
    }

    /// Smallest distance from x to the hyperplanes where the potential is singular.
    fn clearance(&self, x: &[f64]) -> f64 {
        let mut d = f64::INFINITY;
        let n = x.len();
        for j in 0..n {
            for k in j + 1..n {
                if self.g0 != 0.0 {
                    d = d.min((x[j] - x[k]).abs());
                    if self.family == Family::B {
                        d = d.min((x[j] + x[k]).abs());
                    }
                }
            }
            if self.family == Family::B && self.g1 != 0.0 {
                d = d.min(x[j].abs());
            }
        }
        d
    }

    fn potential(&self, x: &[f64]) -> f64 {
        let n = x.len();
        let mut v = self.omega * self.omega * x.iter().map(|t| t * t).sum::<f64>();
        let pair = 2.0 * self.g0 * (self.g0 - 1.0);
        for j in 0..n {
            for k in j + 1..n {
                v += pair * (x[j] - x[k]).powi(-2);
                if self.family == Family::B {
                    v += pair * (x[j] + x[k]).powi(-2);
                }
            }
            if self.family == Family::B {
                v += self.g1 * (self.g1 - 1.0) * x[j].powi(-2);
            }
        }
        v - self.ground
    }

    /// |H₁ψ − E₁ψ|(x) with the kinetic term by the fourth-order central difference of step h.
    pub fn residual(&self, x: &[f64], h: f64) -> Result<f64> {
        if !(h > 0.0 && h.is_finite()) {
            return Err(Error::InvalidParams(format!(
                "step h = {h} must be positive"
            )));
        }
        if self.clearance(x) <= 10.0 * h {
            return Err(Error::SingularPoint(format!(
                "{x:?} is within 10h of a singular hyperplane"
            )));
        }
        let centre = self.eval(x);
        let mut kinetic = 0.0;
        let mut y = x.to_vec();
        for j in 0..x.len() {
            let mut at = |k: f64| {
                y[j] = x[j] + k * h;
                let v = self.eval(&y);
                y[j] = x[j];
                v
            };
            let near = at(1.0) + at(-1.0);
            let far = at(2.0) + at(-2.0);
            kinetic -= (16.0 * near - far - 30.0 * centre) / (12.0 * h * h);
        }
        Ok((kinetic + (self.potential(x) - self.energy) * centre).abs())
    }

    /// Seeded points in [−5/2, 5/2]^n at distance at least `clearance` from the singular hyperplanes.
    pub fn sample_points(
        &self,
        n: usize,
        count: usize,
        seed: u64,
        clearance: f64,
    ) -> Vec<Vec<f64>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::with_capacity(count);
        while out.len() < count {
            let x: Vec<f64> = (0..n).map(|_| rng.gen_range(-2.5..=2.5)).collect();
            if self.clearance(&x) >= clearance {
                out.push(x);
            }
        }
        out
    }
}

pub fn wavefunction_eval(lambda: &Partition, x: &[f64], params: &Params) -> Result<f64> {
    Ok(Wavefunction::new(lambda, params)?.eval(x))
}

pub fn hamiltonian_residual(lambda: &Partition, x: &[f64], h: f64, params: &Params) -> Result<f64> {
    Wavefunction::new(lambda, params)?.residual(x, h)
}
