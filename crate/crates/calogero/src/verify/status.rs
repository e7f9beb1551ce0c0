use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NonGeneric,
}

/// Outcome of one exact identity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub status: Status,
    pub residual_term_count: usize,
    pub detail: Option<String>,
}

impl Check {
    pub fn pass() -> Self {
        Check {
            status: Status::Pass,
            residual_term_count: 0,
            detail: None,
        }
    }

    pub fn fail(residual_term_count: usize, detail: impl Into<String>) -> Self {
        Check {
            status: Status::Fail,
            residual_term_count,
            detail: Some(detail.into()),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Folds a non-generic parameter error into a status; other errors propagate.
    pub fn from_result(r: Result<Check>) -> Result<Check> {
        match r {
            Err(Error::NonGeneric(msg)) => Ok(Check {
                status: Status::NonGeneric,
                residual_term_count: 0,
                detail: Some(msg),
            }),
            other => other,
        }
    }
}
