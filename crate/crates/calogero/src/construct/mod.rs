//! Construction of the monic polynomials p_λ^A, p_λ^B and their Pieri normalization.

mod closed_form;
mod descent;
mod gram_schmidt;
mod jack;
mod normalize;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use serde::Serialize;

pub use closed_form::one_var_closed_form;
pub use descent::{construct_monic, hermite_poly, laguerre_poly, lowering_part};
pub use gram_schmidt::{gram_schmidt_oracle, gram_schmidt_with};
pub use jack::{jack_monic, sutherland_operator};
pub use normalize::{c_coeff, pieri_normalize};

use crate::error::Result;
use crate::scalars::{format_rational, Params};
use crate::sympoly::{Partition, SymPoly, SymPolyJson};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Normalization {
    Monic,
    Pieri,
}

impl std::str::FromStr for Normalization {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "monic" => Ok(Normalization::Monic),
            "pieri" => Ok(Normalization::Pieri),
            other => Err(crate::Error::InvalidParams(format!(
                "unknown normalization {other:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthoPoly {
    pub params: Params,
    pub lambda: Partition,
    pub poly: SymPoly,
    pub normalization: Normalization,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrthoPolyJson {
    #[serde(rename = "schemaVersion")]
    pub schema_version: u32,
    pub family: String,
    pub g0: String,
    pub g1: String,
    pub omega: String,
    pub lambda: Vec<u32>,
    pub normalization: Normalization,
    #[serde(flatten)]
    pub poly: SymPolyJson,
}

pub const SCHEMA_VERSION: u32 = 1;

impl OrthoPoly {
    pub fn to_json(&self) -> OrthoPolyJson {
        OrthoPolyJson {
            schema_version: SCHEMA_VERSION,
            family: self.params.family().to_string(),
            g0: format_rational(self.params.g0()),
            g1: format_rational(self.params.g1()),
            omega: format_rational(self.params.omega()),
            lambda: self.lambda.parts().to_vec(),
            normalization: self.normalization,
            poly: self.poly.to_json(),
        }
    }
}

/// Memoized constructions for one parameter set, safe to share between threads.
pub struct Basis {
    params: Params,
    monic: Mutex<HashMap<Partition, Arc<OrthoPoly>>>,
    pieri: Mutex<HashMap<Partition, Arc<OrthoPoly>>>,
}

impl Basis {
    pub fn new(params: &Params) -> Self {
        Basis {
            params: params.clone(),
            monic: Mutex::new(HashMap::new()),
            pieri: Mutex::new(HashMap::new()),
        }
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn monic(&self, lambda: &Partition) -> Result<Arc<OrthoPoly>> {
        if let Some(p) = self.monic.lock().unwrap().get(lambda) {
            return Ok(p.clone());
        }
        let built = Arc::new(construct_monic(lambda, &self.params)?);
        let mut table = self.monic.lock().unwrap();
        Ok(table.entry(lambda.clone()).or_insert(built).clone())
    }

    pub fn pieri(&self, lambda: &Partition) -> Result<Arc<OrthoPoly>> {
        if let Some(p) = self.pieri.lock().unwrap().get(lambda) {
            return Ok(p.clone());
        }
        let built = Arc::new(pieri_normalize(&*self.monic(lambda)?)?);
        let mut table = self.pieri.lock().unwrap();
        Ok(table.entry(lambda.clone()).or_insert(built).clone())
    }

    pub fn get(&self, lambda: &Partition, normalization: Normalization) -> Result<Arc<OrthoPoly>> {
        match normalization {
            Normalization::Monic => self.monic(lambda),
            Normalization::Pieri => self.pieri(lambda),
        }
    }
}
