use num_traits::One;

use crate::error::{Error, Result};
use crate::scalars::{factorial, int, pochhammer, pow_i, rat, Family, Params, Rational};
use crate::sympoly::{Poly, SymPoly};

/// Prefactor · x^{shift} · ₁F₁(−k; b; ωx²) expanded as a polynomial in one variable.
fn confluent_series(
    k: u32,
    b: &Rational,
    shift: u32,
    prefactor: &Rational,
    omega: &Rational,
) -> Poly {
    let mut out = Poly::zero(1);
    let minus_k = int(-(k as i64));
    for i in 0..=k {
        let c = pochhammer(&minus_k, i) / (pochhammer(b, i) * Rational::from_integer(factorial(i)))
            * pow_i(omega, i as i32)
            * prefactor;
        out.add_term(vec![2 * i + shift], c);
    }
    out
}

/// One-variable Hermite/Laguerre polynomials from their terminating ₁F₁ series.
pub fn one_var_closed_form(lambda: u32, params: &Params) -> Result<SymPoly> {
    if params.n() != 1 {
        return Err(Error::InvalidParams(
            "closed forms exist only for n = 1".into(),
        ));
    }
    let omega = params.omega();
    let minus_omega = -omega.clone();
    let poly = match params.family() {
        Family::A => {
            let (k, b, shift) = if lambda % 2 == 0 {
                (lambda / 2, rat(1, 2), 0)
            } else {
                ((lambda - 1) / 2, rat(3, 2), 1)
            };
            let pre = pochhammer(&b, k) * pow_i(&minus_omega, -(k as i32));
            confluent_series(k, &b, shift, &pre, omega)
        }
        Family::B => {
            let b = params.g1() + rat(1, 2);
            let pre = pochhammer(&b, lambda) * pow_i(&minus_omega, -(lambda as i32));
            confluent_series(lambda, &b, 0, &pre, omega)
        }
    };
    debug_assert!(poly.degree().map_or(true, |_| {
        let top = poly.terms().next_back().unwrap().1;
        top == &Rational::one()
    }));
    SymPoly::from_poly(poly, params.is_even())
}
