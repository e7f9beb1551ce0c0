//! Floating-point checks of the β → 0 confluent limit of the continuous Hahn and
//! Wilson type weights.

mod bounds;
mod gamma;
mod moments;
mod rates;
mod weights;

use serde::Serialize;

use crate::verify::Status;

pub use bounds::{bound_checks, ratio_envelope, stirling_error_bound, BOUND_BETAS};
pub use gamma::{
    f_beta, g_beta, gamma_modulus_asymptotic, gamma_modulus_limit, gamma_ratio_limit, ln_delta,
    ln_gamma, ln_gamma_modulus_limit, ln_gamma_ratio_limit, stirling_ln_gamma, stirling_main,
    stirling_remainder,
};
pub use moments::{even_split, moment_convergence, moment_convergence_batch, truncation_radius};
pub use rates::{modulus_rate, pointwise_convergence, ratio_rate, DEFAULT_LADDER};
pub use weights::{ln_weight_beta, weight_beta, weight_limit, BetaParams, BETA_FLOOR};

/// One row of a limits report.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LimitReport {
    pub check: String,
    pub beta: f64,
    pub max_abs_error: f64,
    pub rate_estimate: Option<f64>,
    pub status: Status,
}

impl LimitReport {
    pub fn new(
        check: impl Into<String>,
        beta: f64,
        max_abs_error: f64,
        rate_estimate: Option<f64>,
        ok: bool,
    ) -> Self {
        LimitReport {
            check: check.into(),
            beta,
            max_abs_error,
            rate_estimate,
            status: if ok { Status::Pass } else { Status::Fail },
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}
