use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalars::{int, rat, Family, Params, Rational};
use crate::sympoly::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Orthogonality,
    Norms,
    Pieri,
    Diffeq,
    DifferenceLimit,
    Harmonics,
    Mehta,
    Normalization,
    WeightsLimit,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Orthogonality,
        Suite::Norms,
        Suite::Pieri,
        Suite::Diffeq,
        Suite::DifferenceLimit,
        Suite::Harmonics,
        Suite::Mehta,
        Suite::Normalization,
        Suite::WeightsLimit,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Orthogonality => "orthogonality",
            Suite::Norms => "norms",
            Suite::Pieri => "pieri",
            Suite::Diffeq => "diffeq",
            Suite::DifferenceLimit => "difference-limit",
            Suite::Harmonics => "harmonics",
            Suite::Mehta => "mehta",
            Suite::Normalization => "normalization",
            Suite::WeightsLimit => "weights-limit",
        }
    }

    /// Suites whose oracle is the exact Gaussian functional need integer couplings.
    pub fn needs_integer_couplings(self) -> bool {
        matches!(
            self,
            Suite::Orthogonality | Suite::Mehta | Suite::WeightsLimit
        )
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidParams(format!("unknown suite {s:?}")))
    }
}

/// The verification grid and run options.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub families: Vec<Family>,
    pub ns: Vec<usize>,
    pub g0s: Vec<Rational>,
    pub g1s: Vec<Rational>,
    pub omegas: Vec<Rational>,
    pub lambda: Option<Vec<u32>>,
    pub max_weight: u32,
    pub r: Option<usize>,
    pub seed: u64,
    pub tol: Option<f64>,
    pub deep: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            families: vec![Family::A, Family::B],
            ns: vec![1, 2, 3],
            g0s: vec![int(0), rat(1, 2), int(1), int(2)],
            g1s: vec![int(0), rat(1, 2), int(1)],
            omegas: vec![int(1), rat(2, 5)],
            lambda: None,
            max_weight: 3,
            r: None,
            seed: 0,
            tol: None,
            deep: false,
        }
    }
}

impl SuiteConfig {
    /// Extends the defaults to |λ| ≤ 4 and n = 4.
    pub fn deepen(&mut self) {
        self.deep = true;
        self.max_weight = self.max_weight.max(4);
        if !self.ns.contains(&4) && self.ns == [1, 2, 3] {
            self.ns.push(4);
        }
    }

    /// Every parameter set of the grid, in canonical order.
    pub fn params(&self) -> Result<Vec<Params>> {
        let mut out = Vec::new();
        for &family in &self.families {
            for &n in &self.ns {
                for g0 in &self.g0s {
                    let g1s = match family {
                        Family::A => vec![int(0)],
                        Family::B => self.g1s.clone(),
                    };
                    for g1 in &g1s {
                        for omega in &self.omegas {
                            out.push(Params::new(
                                family,
                                n,
                                g0.clone(),
                                g1.clone(),
                                omega.clone(),
                            )?);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// The partitions to test for one parameter set.
    pub fn partitions(&self, params: &Params) -> Result<Vec<Partition>> {
        match &self.lambda {
            Some(parts) => {
                let mut v = parts.clone();
                if v.len() > params.n() {
                    return Err(Error::InvalidParams(format!(
                        "λ has more than {} parts",
                        params.n()
                    )));
                }
                v.resize(params.n(), 0);
                Ok(vec![Partition::new(v)?])
            }
            None => Ok(Partition::up_to_weight(params.n(), self.max_weight)),
        }
    }

    /// Orders r to test: the configured one, or 1..=n.
    pub fn orders(&self, n: usize) -> Vec<usize> {
        match self.r {
            Some(r) if r <= n => vec![r],
            Some(_) => Vec::new(),
            None => (1..=n).collect(),
        }
    }
}
