//! The second-order operators D₁, the eigenvalues E_r, the difference operators D_{r,β}
//! and the Calogero Hamiltonians.

mod d1;
mod difference;
mod hamiltonian;

pub use d1::{apply_d1, difference_eigenvalue, eigenvalue_e, ground_energy};
pub use difference::{
    check_point, difference_eval, difference_r1_direct, difference_series, difference_series_to,
    difference_series_truncated, sample_point,
};
pub use hamiltonian::{hamiltonian_residual, wavefunction_eval, Wavefunction};
