//! Pieri coefficients, the exact Pieri identities, norm formulas and the norm recurrence.

mod checks;
mod coeffs;
mod norms;

pub use checks::{pieri_full_b_check, pieri_r1_check, pieri_structure_a_check, StructureReport};
pub use coeffs::{uhat_b, vhat_general, vhat_r1, SignedIndexSets};
pub use norms::{
    chained_norm_ratio, mehta_macdonald, norm_formula, norm_ratio, norm_recurrence_check,
};
