use num_traits::{One, Zero};

use super::coeffs::{vhat_general, SignedIndexSets};
use crate::construct::c_coeff;
use crate::error::{Error, Result};
use crate::scalars::{
    factorial, format_rational, gamma_half_integer, int, pow_i, rat, twice_as_integer,
    CouplingProduct, ExactScalar, Family, Params, Rational,
};
use crate::sympoly::Partition;
use crate::verify::Check;

fn check_length(lambda: &Partition, params: &Params) -> Result<()> {
    if lambda.n() != params.n() {
        return Err(Error::InvalidParams(format!(
            "partition {lambda} has {} parts, expected {}",
            lambda.n(),
            params.n()
        )));
    }
    Ok(())
}

/// ⟨p_λ, p_λ⟩ / ⟨1, 1⟩ as a product of Pochhammer symbols, valid at all couplings.
pub fn norm_ratio(lambda: &Partition, params: &Params) -> Result<Rational> {
    check_length(lambda, params)?;
    let n = params.n();
    let parts = lambda.parts();
    let zero = Rational::zero();
    let one = Rational::one();
    let mut prod = CouplingProduct::new(params.g0());
    for j in 0..n {
        for k in j + 1..n {
            let m = parts[j] - parts[k];
            let d = int((k - j) as i64);
            prod.mul_pochhammer(&zero, &(&d + &one), m);
            prod.mul_pochhammer(&one, &(&d - &one), m);
            prod.div_pochhammer(&zero, &d, m)?;
            prod.div_pochhammer(&one, &d, m)?;
        }
    }
    for (j, &l) in parts.iter().enumerate() {
        let slope = int((n - 1 - j) as i64);
        prod.mul_pochhammer(&one, &slope, l);
        if params.family() == Family::B {
            prod.mul_pochhammer(&(params.g1() + rat(1, 2)), &slope, l);
        }
    }
    let weight = lambda.weight() as i32;
    let scale = match params.family() {
        Family::A => pow_i(&(int(2) * params.omega()), -weight),
        Family::B => pow_i(params.omega(), -2 * weight),
    };
    prod.mul_const(&scale);
    prod.value()
}

/// A rational a + b·g₀ + c·g₁ as a Γ argument.
struct GammaArgs<'a> {
    params: &'a Params,
}

impl GammaArgs<'_> {
    fn value(&self, a: i64, b: i64, g1: bool) -> Rational {
        let mut v = int(a) + int(b) * self.params.g0();
        if g1 {
            v += self.params.g1() + rat(1, 2);
        }
        v
    }

    fn gamma(&self, a: i64, b: i64, g1: bool) -> Result<ExactScalar> {
        gamma_half_integer(&self.value(a, b, g1), self.params.omega())
    }
}

/// Π_{j<k} Γ((d+1)g₀+m)Γ(1+(d−1)g₀+m) / (Γ(dg₀+m)Γ(1+dg₀+m)), d = k−j, m = λ_j−λ_k.
///
/// At g₀ = 0 a pair with m = 0 has the limit d/(d+1).
fn pair_gammas(parts: &[u32], args: &GammaArgs) -> Result<ExactScalar> {
    let omega = args.params.omega();
    let n = parts.len();
    let mut acc = ExactScalar::from_rational(Rational::one(), omega);
    for j in 0..n {
        for k in j + 1..n {
            let d = (k - j) as i64;
            let m = (parts[j] - parts[k]) as i64;
            if args.params.g0().is_zero() {
                if m == 0 {
                    acc = acc.scale(&rat(d, d + 1));
                }
                continue;
            }
            let num = &args.gamma(m, d + 1, false)? * &args.gamma(1 + m, d - 1, false)?;
            let den = &args.gamma(m, d, false)? * &args.gamma(1 + m, d, false)?;
            acc = &acc * &num.checked_div(&den)?;
        }
    }
    Ok(acc)
}

/// (2^a)·ω^{−e}·π^{k/2} with a and e given as rationals that must be integral resp. half-integral.
fn prefactor(
    two_exp: &Rational,
    omega_exp: &Rational,
    half_pi: i32,
    omega: &Rational,
) -> Result<ExactScalar> {
    if !two_exp.is_integer() {
        return Err(Error::NotRepresentable(format!(
            "power 2^{} leaves a stray square root of 2",
            format_rational(two_exp)
        )));
    }
    let twice = twice_as_integer(omega_exp)
        .ok_or_else(|| Error::NotRepresentable(format!("ω^{}", format_rational(omega_exp))))?;
    let two = pow_i(
        &int(2),
        num_traits::ToPrimitive::to_i32(two_exp.numer()).unwrap_or(0),
    );
    let pw = ExactScalar::omega_half_power(-(twice as i32), omega);
    Ok((&pw * &ExactScalar::pi_half_power(half_pi, omega)).scale(&two))
}

/// Closed form of ⟨p_λ, p_λ⟩ in Γ functions; exact whenever the Γ arguments are half-integers.
pub fn norm_formula(lambda: &Partition, params: &Params) -> Result<ExactScalar> {
    check_length(lambda, params)?;
    let n = params.n();
    let nn = int(n as i64);
    let args = GammaArgs { params };
    let parts = lambda.parts();
    let weight = int(lambda.weight() as i64);
    let g0 = params.g0();
    let pairs = &nn * (&nn - int(1)) / int(2);
    let omega = params.omega();
    let head = match params.family() {
        Family::A => {
            // (2π)^{n/2}/(2ω)^{|λ| + g₀n(n−1)/2 + n/2}
            let e = &weight + g0 * &pairs + &nn / int(2);
            prefactor(&(&nn / int(2) - &e), &e, n as i32, omega)?
        }
        Family::B => {
            let e = int(2) * &weight + int(2) * g0 * &pairs + (params.g1() + rat(1, 2)) * &nn;
            prefactor(&Rational::zero(), &e, 0, omega)?
        }
    };
    let mut acc = head.scale(&Rational::from_integer(factorial(n as u32)));
    acc = &acc * &pair_gammas(parts, &args)?;
    for (j, &l) in parts.iter().enumerate() {
        let slope = (n - 1 - j) as i64;
        acc = &acc * &args.gamma(1 + l as i64, slope, false)?;
        if params.family() == Family::B {
            acc = &acc * &args.gamma(l as i64, slope, true)?;
        }
    }
    Ok(acc)
}

/// ⟨1, 1⟩ in the Mehta–Macdonald closed form.
pub fn mehta_macdonald(params: &Params) -> Result<ExactScalar> {
    let n = params.n();
    let nn = int(n as i64);
    let args = GammaArgs { params };
    let g0 = params.g0();
    let pairs = &nn * (&nn - int(1)) / int(2);
    let omega = params.omega();
    let mut acc = match params.family() {
        Family::A => {
            let e = g0 * &pairs + &nn / int(2);
            prefactor(&(&nn / int(2) - &e), &e, n as i32, omega)?
        }
        Family::B => {
            let e = int(2) * g0 * &pairs + (params.g1() + rat(1, 2)) * &nn;
            prefactor(&Rational::zero(), &e, 0, omega)?
        }
    };
    let base = args.gamma(1, 1, false)?;
    for j in 1..=n as i64 {
        acc = &acc * &args.gamma(1, j, false)?.checked_div(&base)?;
        if params.family() == Family::B {
            acc = &acc * &args.gamma(0, j - 1, true)?;
        }
    }
    Ok(acc)
}

/// e_{1..r} as a signed set.
fn leading_block(r: usize, n: usize) -> Result<SignedIndexSets> {
    if r == 0 || r > n {
        return Err(Error::InvalidParams(format!("r = {r} outside 1..={n}")));
    }
    SignedIndexSets::new((0..r).collect(), vec![], n)
}

/// Checks c_λ = c_{λ+e_{1..r}}·V̂_{{1..r},∅;{r+1..n}}(λ) and the monic norm recurrence
/// ‖p_{λ+e}‖² = V̂_{{1..r},∅}(λ)·V̂_{∅,{1..r}}(λ+e)·‖p_λ‖², both with the family-B ω factors.
pub fn norm_recurrence_check(lambda: &Partition, r: usize, params: &Params) -> Result<Check> {
    check_length(lambda, params)?;
    let n = params.n();
    let up = leading_block(r, n)?;
    let raised = up
        .target(lambda)
        .ok_or_else(|| Error::InvalidParams(format!("{lambda} + e_1..{r} is not a partition")))?;
    let down = SignedIndexSets::new(vec![], (0..r).collect(), n)?;
    let k_set = up.complement(n);
    let v_up = vhat_general(&up, &k_set, lambda, params)?;
    let v_down = vhat_general(&down, &k_set, &raised, params)?;
    let kappa = match params.family() {
        Family::A => Rational::one(),
        Family::B => pow_i(&-params.omega().clone(), -(r as i32)),
    };

    let mut problems = Vec::new();
    let c = c_coeff(lambda, params)?;
    let c_raised = c_coeff(&raised, params)?;
    if c != &c_raised * &v_up * &kappa {
        problems.push(format!(
            "c-identity: c_λ = {} but c_(λ+e)·V̂ = {}",
            format_rational(&c),
            format_rational(&(&c_raised * &v_up * &kappa))
        ));
    }
    let ratio = norm_ratio(lambda, params)?;
    let ratio_raised = norm_ratio(&raised, params)?;
    let predicted = &ratio * &v_up * &v_down * &kappa * &kappa;
    if ratio_raised != predicted {
        problems.push(format!(
            "norm recurrence: {} vs {}",
            format_rational(&ratio_raised),
            format_rational(&predicted)
        ));
    }
    if problems.is_empty() {
        Ok(Check::pass())
    } else {
        Ok(Check::fail(0, problems.join("; ")))
    }
}

/// ‖p_λ‖²/⟨1,1⟩ obtained by chaining the norm recurrence from λ = 0.
pub fn chained_norm_ratio(lambda: &Partition, params: &Params) -> Result<Rational> {
    check_length(lambda, params)?;
    let n = params.n();
    let kappa_sq = match params.family() {
        Family::A => Rational::one(),
        Family::B => pow_i(params.omega(), -2),
    };
    let mut current = Partition::zero(n);
    let mut acc = Rational::one();
    let parts = lambda.parts();
    for r in (1..=n).rev() {
        let next = if r < n { parts[r] } else { 0 };
        let up = leading_block(r, n)?;
        let down = SignedIndexSets::new(vec![], (0..r).collect(), n)?;
        let k_set = up.complement(n);
        for _ in next..parts[r - 1] {
            let raised = up
                .target(&current)
                .ok_or_else(|| Error::Internal("chain left Λ".into()))?;
            let v_up = vhat_general(&up, &k_set, &current, params)?;
            let v_down = vhat_general(&down, &k_set, &raised, params)?;
            acc *= v_up * v_down * pow_i(&kappa_sq, r as i32);
            current = raised;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::construct_monic;
    use crate::sympoly::gram_inner;

    fn lam(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn closed_form_examples() {
        let w = rat(2, 5);
        let a1 = Params::type_a(1, int(0), w.clone()).unwrap();
        let expect = (&ExactScalar::pi_half_power(1, &w) * &ExactScalar::omega_half_power(-5, &w))
            .scale(&rat(1, 2));
        assert_eq!(norm_formula(&lam(&[2]), &a1).unwrap(), expect);

        let a2 = Params::type_a(2, int(1), w.clone()).unwrap();
        let expect = &ExactScalar::pi_half_power(2, &w) * &ExactScalar::omega_half_power(-4, &w);
        assert_eq!(norm_formula(&lam(&[0, 0]), &a2).unwrap(), expect);
        assert_eq!(mehta_macdonald(&a2).unwrap(), expect);

        let b1 = Params::type_b(1, int(0), int(1), w.clone()).unwrap();
        let expect = (&ExactScalar::pi_half_power(1, &w) * &ExactScalar::omega_half_power(-7, &w))
            .scale(&rat(3, 4));
        assert_eq!(norm_formula(&lam(&[1]), &b1).unwrap(), expect);
        let expect = (&ExactScalar::pi_half_power(1, &w) * &ExactScalar::omega_half_power(-3, &w))
            .scale(&rat(1, 2));
        assert_eq!(mehta_macdonald(&b1).unwrap(), expect);

        let expect = &ExactScalar::pi_half_power(1, &w) * &ExactScalar::omega_half_power(-1, &w);
        assert_eq!(mehta_macdonald(&a1).unwrap(), expect);
    }

    #[test]
    fn agrees_with_gram() {
        for params in [
            Params::type_a(2, int(1), rat(2, 5)).unwrap(),
            Params::type_a(3, int(0), int(1)).unwrap(),
            Params::type_a(2, int(0), int(1)).unwrap(),
            Params::type_b(2, int(1), int(1), int(1)).unwrap(),
            Params::type_b(2, int(0), int(0), rat(2, 5)).unwrap(),
        ] {
            for l in Partition::up_to_weight(params.n(), 2) {
                let p = construct_monic(&l, &params).unwrap();
                let gram = gram_inner(&p.poly, &p.poly, &params).unwrap();
                assert_eq!(norm_formula(&l, &params).unwrap(), gram, "{params} {l}");
                let ratio = gram
                    .checked_div(&mehta_macdonald(&params).unwrap())
                    .unwrap();
                assert_eq!(ratio.as_rational(), Some(norm_ratio(&l, &params).unwrap()));
            }
        }
    }

    #[test]
    fn stray_root_two_reported() {
        let a = Params::type_a(2, rat(1, 2), int(1)).unwrap();
        assert!(matches!(
            norm_formula(&lam(&[1, 0]), &a),
            Err(Error::NotRepresentable(_))
        ));
        assert!(norm_ratio(&lam(&[1, 0]), &a).is_ok());
    }

    #[test]
    fn recurrence_examples() {
        let w = rat(2, 5);
        let a1 = Params::type_a(1, int(0), w.clone()).unwrap();
        for l in 0..5u32 {
            assert!(norm_recurrence_check(&lam(&[l]), 1, &a1).unwrap().passed());
            let step =
                norm_ratio(&lam(&[l + 1]), &a1).unwrap() / norm_ratio(&lam(&[l]), &a1).unwrap();
            assert_eq!(step, int(l as i64 + 1) / (int(2) * &w));
        }
        let b2 = Params::type_b(2, rat(1, 2), int(1), w).unwrap();
        assert!(norm_recurrence_check(&lam(&[1, 1]), 2, &b2)
            .unwrap()
            .passed());
        assert!(norm_recurrence_check(&lam(&[1, 1]), 1, &b2)
            .unwrap()
            .passed());
    }

    #[test]
    fn chains_reproduce_ratio() {
        for params in [
            Params::type_a(3, rat(1, 2), int(1)).unwrap(),
            Params::type_b(3, int(2), rat(3, 2), rat(2, 5)).unwrap(),
            Params::type_b(2, int(0), int(0), int(1)).unwrap(),
        ] {
            for l in Partition::up_to_weight(params.n(), 4) {
                assert_eq!(
                    chained_norm_ratio(&l, &params).unwrap(),
                    norm_ratio(&l, &params).unwrap(),
                    "{params} {l}"
                );
            }
        }
    }
}
