//! Radial–spherical separation: deformed Laplacians, radial polynomials and the
//! decomposition of p_λ into generalized spherical harmonics.

mod decompose;
mod spherical;

pub use decompose::{
    decompose_harmonic, dunkl_projection, harmonics_check, HarmonicDecomposition,
    HarmonicDecompositionJson, HarmonicTerm, HarmonicTermJson, HarmonicsReport,
};
pub use spherical::{
    apply_l, deformation_degree, expected_harmonic_dimension, harmonic_dimension, r_squared,
    radial_in_x, radial_poly, x_degree,
};
