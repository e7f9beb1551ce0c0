use std::f64::consts::PI;

use num_complex::Complex64;
use quadrature::double_exponential::integrate;

use super::gamma::{
    f_beta, g_beta, gamma_ratio_limit, ln_gamma, ln_gamma_modulus_limit, stirling_main,
};
use super::LimitReport;

/// β values at which the domination bounds are sampled.
pub const BOUND_BETAS: [f64; 4] = [0.9, 0.5, 0.1, 0.01];

const GRID_POINTS: usize = 100;

/// 1/(12|z|cos²(θ/2)), the bound on the Stirling remainder.
pub fn stirling_error_bound(z: Complex64) -> f64 {
    let half = z.arg() / 2.0;
    1.0 / (12.0 * z.norm() * half.cos().powi(2))
}

fn stirling_remainder_direct(z: Complex64) -> Complex64 {
    let r = ln_gamma(z) - stirling_main(z);
    let im = r.im - 2.0 * PI * (r.im / (2.0 * PI)).round();
    Complex64::new(r.re, im)
}

/// ∫₀^∞ e^{−bt}|a − (1−e^{−at})/(1−e^{−t})| dt/t for b > 0.
fn ratio_exponent_bound(a: f64, b: f64) -> f64 {
    let f = |t: f64| {
        if t == 0.0 {
            return 0.5 * (a * (a - 1.0)).abs();
        }
        let q = (-a * t).exp_m1() / (-t).exp_m1();
        (-b * t).exp() * (a - q).abs() / t
    };
    let tail = 40.0 / b;
    integrate(f, 0.0, 1.0, 1e-13).integral + integrate(f, 1.0, tail.max(2.0), 1e-13).integral
}

/// Polynomial envelope of |β^a Γ(a+b+iy/β)/Γ(b+iy/β)| valid for all 0 < β < 1.
///
/// Integer a uses ((a+b)²+y²)^{a/2}; otherwise (b²+y²)^{a/2}·e^C from the integral
/// representation, with b = 0 first shifted to b = 1.
pub fn ratio_envelope(a: f64, b: f64, y: f64) -> f64 {
    if a == 0.0 {
        return 1.0;
    }
    if a.fract() == 0.0 {
        return ((a + b).powi(2) + y * y).powf(a / 2.0);
    }
    if b == 0.0 {
        return ratio_envelope(a, 1.0, y);
    }
    (b * b + y * y).powf(a / 2.0) * ratio_exponent_bound(a, b).exp()
}

fn grid(alpha: f64) -> Vec<f64> {
    let half = 4.0 / alpha + 8.0;
    (0..GRID_POINTS)
        .map(|k| -half + 2.0 * half * k as f64 / (GRID_POINTS - 1) as f64)
        .collect()
}

/// Samples the appendix bounds on a 100-point y grid for each β; every row must pass.
///
/// `ratio_cases` lists (a, b) pairs for the gamma-ratio envelopes.
pub fn bound_checks(alpha: f64, betas: &[f64], ratio_cases: &[(f64, f64)]) -> Vec<LimitReport> {
    let ys = grid(alpha);
    let mut rows = Vec::new();
    for &beta in betas {
        let mut excess = 0.0f64;
        for &y in &ys {
            let lhs = ln_gamma_modulus_limit(alpha, y, beta);
            let rhs = -f_beta(alpha, y, beta) + g_beta(alpha, beta).ln();
            excess = excess.max(lhs - rhs);
        }
        rows.push(LimitReport::new(
            "bound1",
            beta,
            excess.max(0.0),
            None,
            excess <= 1e-9,
        ));

        let mut excess = 0.0f64;
        for &y in &ys {
            let z = Complex64::new(1.0 / (alpha * beta * beta), y / beta);
            let r = stirling_remainder_direct(z).norm();
            excess = excess.max(r - stirling_error_bound(z));
        }
        rows.push(LimitReport::new(
            "errorbound",
            beta,
            excess.max(0.0),
            None,
            excess <= 1e-9,
        ));

        let mut excess = 0.0f64;
        for &y in &ys {
            let f = f_beta(alpha, y, beta);
            let cap = if y.abs() < 1.0 / alpha {
                0.0
            } else {
                -y.abs() / 3.0
            };
            excess = excess.max(-f - cap);
        }
        rows.push(LimitReport::new(
            "expobound",
            beta,
            excess.max(0.0),
            None,
            excess <= 1e-12,
        ));

        let f0 = f_beta(alpha, 0.0, beta);
        let margin = f_beta(alpha, 1.0 / alpha, beta) - 1.0 / (3.0 * alpha);
        rows.push(LimitReport::new(
            "f-beta-values",
            beta,
            f0.abs(),
            Some(margin),
            f0 == 0.0 && margin > 0.0,
        ));

        let mut worst = 0.0f64;
        let mut ok = true;
        for b in [0.0, 0.5] {
            for &y in &ys {
                let v = gamma_ratio_limit(2.0, b, y, beta);
                let exact: f64 = (0..2)
                    .map(|m| Complex64::new((m as f64 + b) * beta, y).norm())
                    .product();
                let err = (v - exact).abs();
                worst = worst.max(err);
                ok &= err <= 1e-10 * exact.max(1.0) && v <= ratio_envelope(2.0, b, y);
            }
        }
        rows.push(LimitReport::new("ratio-integer", beta, worst, None, ok));

        let mut excess = f64::NEG_INFINITY;
        for &(a, b) in ratio_cases {
            for &y in &ys {
                let v = gamma_ratio_limit(a, b, y, beta);
                excess = excess.max(v / ratio_envelope(a, b, y) - 1.0);
            }
        }
        rows.push(LimitReport::new(
            "ratio-envelope",
            beta,
            excess.max(0.0),
            None,
            excess <= 1e-12,
        ));
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn appendix_values() {
        for beta in [0.9, 0.5, 0.1] {
            assert_eq!(f_beta(1.0, 0.0, beta), 0.0);
            assert!(f_beta(1.0, 1.0, beta) > 1.0 / 3.0);
        }
        let lower = PI / 4.0 - 2f64.sqrt().ln();
        assert!(f_beta(1.0, 1.0, 0.999) > lower);
    }

    #[test]
    fn exponent_bound_vanishes_at_integer_one() {
        // a = 1 makes the integrand identically zero
        assert!(ratio_exponent_bound(1.0, 0.5).abs() < 1e-14);
        assert!(ratio_exponent_bound(0.5, 0.5) > 0.0);
    }

    #[test]
    fn all_bounds_hold() {
        let cases = [
            (0.5, 0.0),
            (0.5, 0.5),
            (1.5, 0.5),
            (2.5, 1.0),
            (1.0, 0.0),
            (3.0, 0.5),
        ];
        for alpha in [1.0, 0.5, 2.0] {
            let rows = bound_checks(alpha, &BOUND_BETAS, &cases);
            assert_eq!(rows.len(), 24);
            for row in &rows {
                assert!(row.passed(), "alpha={alpha}: {row:?}");
            }
        }
    }
}
