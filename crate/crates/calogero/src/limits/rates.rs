use crate::error::Result;

use super::gamma::{gamma_modulus_limit, gamma_ratio_limit};
use super::weights::{weight_beta, weight_limit, BetaParams};
use super::LimitReport;

/// β = 10^{−1}, 10^{−1.5}, …, 10^{−3}.
pub const DEFAULT_LADDER: [f64; 5] = [
    1e-1,
    0.031_622_776_601_683_79,
    1e-2,
    0.003_162_277_660_168_379,
    1e-3,
];

/// Errors below this are rounding noise and never count against the rate.
const NOISE: f64 = 1e-10;

/// Marks rows whose error/β^k exceeds four times the largest of the first two ratios.
fn rate_rows(check: &str, ladder: &[f64], errors: &[f64], k: i32) -> Vec<LimitReport> {
    let rates: Vec<f64> = ladder
        .iter()
        .zip(errors)
        .map(|(b, e)| e / b.powi(k))
        .collect();
    let cap = 4.0 * rates.iter().take(2).cloned().fold(0.0, f64::max);
    ladder
        .iter()
        .zip(errors)
        .zip(&rates)
        .map(|((&beta, &err), &rate)| {
            LimitReport::new(check, beta, err, Some(rate), err <= NOISE || rate <= cap)
        })
        .collect()
}

/// Max over `ys` of |δ|Γ| − e^{−αy²/2}| along the ladder, with error/β².
pub fn modulus_rate(alpha: f64, ys: &[f64], ladder: &[f64]) -> Vec<LimitReport> {
    let errors: Vec<f64> = ladder
        .iter()
        .map(|&beta| {
            ys.iter()
                .map(|&y| {
                    (gamma_modulus_limit(alpha, y, beta) - (-alpha * y * y / 2.0).exp()).abs()
                })
                .fold(0.0, f64::max)
        })
        .collect();
    rate_rows("gamma-modulus-rate", ladder, &errors, 2)
}

/// Max over `ys` of |β^a Γ(a+b+iy/β)/Γ(b+iy/β)| − |y|^a| along the ladder, with error/β.
pub fn ratio_rate(a: f64, b: f64, ys: &[f64], ladder: &[f64]) -> Vec<LimitReport> {
    let errors: Vec<f64> = ladder
        .iter()
        .map(|&beta| {
            ys.iter()
                .map(|&y| (gamma_ratio_limit(a, b, y, beta) - y.abs().powf(a)).abs())
                .fold(0.0, f64::max)
        })
        .collect();
    rate_rows("gamma-ratio-rate", ladder, &errors, 1)
}

/// |Δ_β − Δ| at each point must shrink along the ladder, ending below `rel_tol` relative.
///
/// A point whose error is already a hundredth of `rel_tol` is exempt from the shrinking
/// test, since the error may change sign there.
pub fn pointwise_convergence(
    bp: &BetaParams,
    points: &[Vec<f64>],
    ladder: &[f64],
    rel_tol: f64,
) -> Result<Vec<LimitReport>> {
    let targets: Vec<f64> = points.iter().map(|x| weight_limit(x, bp)).collect();
    let mut previous: Option<Vec<f64>> = None;
    let mut rows = Vec::with_capacity(ladder.len());
    for (i, &beta) in ladder.iter().enumerate() {
        let at = bp.with_beta(beta);
        let errors = points
            .iter()
            .zip(&targets)
            .map(|(x, t)| Ok((weight_beta(x, &at)? - t).abs()))
            .collect::<Result<Vec<f64>>>()?;
        let mut ok = match &previous {
            Some(prev) => errors
                .iter()
                .zip(prev)
                .zip(&targets)
                .all(|((e, p), t)| e < p || *p <= 1e-2 * rel_tol * t.abs()),
            None => true,
        };
        if i + 1 == ladder.len() {
            ok &= errors
                .iter()
                .zip(&targets)
                .all(|(e, t)| *e <= rel_tol * t.abs());
        }
        let max = errors.iter().cloned().fold(0.0, f64::max);
        rows.push(LimitReport::new(
            "weight-pointwise",
            beta,
            max,
            Some(max / beta),
            ok,
        ));
        previous = Some(errors);
    }
    Ok(rows)
}
