//! Multivariable Hermite (type A) and Laguerre (type B) polynomials of the confined
//! rational Calogero system, built in exact rational arithmetic, together with
//! executable checks of their orthogonality, norms, eigen-equations, Pieri rules,
//! harmonic decompositions and confluent limits.

pub mod construct;
pub mod error;
pub mod harmonics;
pub mod limits;
pub mod linalg;
pub mod operators;
pub mod pieri;
pub mod scalars;
pub mod sympoly;
pub mod verify;

pub use error::{Error, Result};
