//! Exact scalars: rationals, the quadratic extension by √ω and formal powers of π^{1/2}.

mod coupling;
mod exact;
mod params;
mod rational;

pub use coupling::CouplingProduct;
pub use exact::{gamma_half_integer, ExactScalar, ScalarTerm};
pub use params::{Family, Params, MAX_VARIABLES};
pub use rational::{
    double_factorial_odd, factorial, format_rational, int, parse_rational, pochhammer, pow_i, rat,
    rational_sqrt, serde_str, to_f64, twice_as_integer, Rational,
};
