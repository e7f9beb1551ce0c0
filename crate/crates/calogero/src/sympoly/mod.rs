//! Polynomial algebra: partitions, monomial symmetric bases, divided differences and
//! Gaussian Gram inner products.

mod divided;
mod gram;
mod partition;
mod poly;
mod sym;

pub use divided::{laplacian, sum_inv_x, sum_over_pairs, DividedDiff};
pub use gram::{gaussian_moment, gram_inner, weight_polynomial, GaussianFunctional};
pub use partition::Partition;
pub use poly::{Exponent, FloatPoly, Poly};
pub use sym::{elementary_sym, MsymEntry, SymPoly, SymPolyJson, TermEntry};
