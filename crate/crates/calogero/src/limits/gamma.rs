use std::f64::consts::PI;

use num_complex::Complex64;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// B_{2k} / (2k(2k−1)) for the Stirling series.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

fn half_ln_two_pi() -> f64 {
    0.5 * (2.0 * PI).ln()
}

/// ln sin(πz), stable for large |Im z|; the imaginary part is only defined mod 2π.
fn ln_sin_pi(z: Complex64) -> Complex64 {
    if z.im < 0.0 {
        return ln_sin_pi(z.conj()).conj();
    }
    let w = z * PI;
    let i = Complex64::i();
    -i * w + (Complex64::new(1.0, 0.0) - (i * w * 2.0).exp()).ln() + (i * 0.5).ln()
}

/// Principal-branch ln Γ(z) by the Lanczos approximation (g = 7), with reflection for Re z < 1/2.
pub fn ln_gamma(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        let one = Complex64::new(1.0, 0.0);
        return Complex64::new(PI.ln(), 0.0) - ln_sin_pi(z) - ln_gamma(one - z);
    }
    let z = z - 1.0;
    let mut x = Complex64::new(LANCZOS[0], 0.0);
    for (k, c) in LANCZOS.iter().enumerate().skip(1) {
        x += *c / (z + k as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    half_ln_two_pi() + (z + 0.5) * t.ln() - t + x.ln()
}

/// (z − 1/2) ln z − z + ½ ln 2π, the Stirling main part.
pub fn stirling_main(z: Complex64) -> Complex64 {
    (z - 0.5) * z.ln() - z + half_ln_two_pi()
}

/// R(z) in Γ(z) = √(2π) e^{−z} z^{z−1/2} e^{R(z)}: series for |z| ≥ 10, else from Lanczos.
pub fn stirling_remainder(z: Complex64) -> Complex64 {
    if z.norm() < 10.0 {
        return ln_gamma(z) - stirling_main(z);
    }
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut power = inv;
    let mut acc = Complex64::new(0.0, 0.0);
    for c in STIRLING {
        acc += power * c;
        power *= inv2;
    }
    acc
}

/// ln Γ(z) from the Stirling series; accurate for |z| ≥ 10 in |arg z| < π.
pub fn stirling_ln_gamma(z: Complex64) -> Complex64 {
    stirling_main(z) + stirling_remainder(z)
}

/// ln δ(α, β) = ½ ln(e/2π) + (1 + ln αβ²)(1/(αβ²) − ½).
pub fn ln_delta(alpha: f64, beta: f64) -> f64 {
    let ab2 = alpha * beta * beta;
    0.5 * (1.0 - (2.0 * PI).ln()) + (1.0 + ab2.ln()) * (1.0 / ab2 - 0.5)
}

/// ln[δ(α,β)·|Γ(1/(αβ²) + iy/β)|].
pub fn ln_gamma_modulus_limit(alpha: f64, y: f64, beta: f64) -> f64 {
    let z = Complex64::new(1.0 / (alpha * beta * beta), y / beta);
    ln_delta(alpha, beta) + ln_gamma(z).re
}

/// δ(α,β)·|Γ(1/(αβ²) + iy/β)|, which tends to exp(−αy²/2).
pub fn gamma_modulus_limit(alpha: f64, y: f64, beta: f64) -> f64 {
    ln_gamma_modulus_limit(alpha, y, beta).exp()
}

/// The asymptotic form (1+α²β²y²)^{1/(2αβ²)} e^{−(y/β)arctan(αβy)} / δ, without the (1+O(β²)).
pub fn gamma_modulus_asymptotic(alpha: f64, y: f64, beta: f64) -> f64 {
    let t = alpha * beta * y;
    let ln = (t * t).ln_1p() / (2.0 * alpha * beta * beta) - (y / beta) * t.atan();
    ln.exp()
}

/// ln|β^a Γ(a+b+iy/β)/Γ(b+iy/β)|; −∞ when b = y = 0 < a.
pub fn ln_gamma_ratio_limit(a: f64, b: f64, y: f64, beta: f64) -> f64 {
    if a == 0.0 {
        return 0.0;
    }
    if b == 0.0 {
        if y == 0.0 {
            return f64::NEG_INFINITY;
        }
        // Γ(a+iY)/Γ(iY) = Γ(a+1+iY)/Γ(1+iY) · iy/(aβ+iy)
        let shift = Complex64::new(0.0, y) / Complex64::new(a * beta, y);
        return ln_gamma_ratio_limit(a, 1.0, y, beta) + shift.norm().ln();
    }
    let yy = y / beta;
    let num = ln_gamma(Complex64::new(a + b, yy)).re;
    let den = ln_gamma(Complex64::new(b, yy)).re;
    a * beta.ln() + num - den
}

/// |β^a Γ(a+b+iy/β)/Γ(b+iy/β)|, which tends to |y|^a.
pub fn gamma_ratio_limit(a: f64, b: f64, y: f64, beta: f64) -> f64 {
    ln_gamma_ratio_limit(a, b, y, beta).exp()
}

/// F_β(y) = (y/β)arctan(αβy) − ln(1+α²β²y²)/(2αβ²).
pub fn f_beta(alpha: f64, y: f64, beta: f64) -> f64 {
    let t = alpha * beta * y;
    (y / beta) * t.atan() - (t * t).ln_1p() / (2.0 * alpha * beta * beta)
}

/// G_β = e^{αβ²/6}.
pub fn g_beta(alpha: f64, beta: f64) -> f64 {
    (alpha * beta * beta / 6.0).exp()
}
