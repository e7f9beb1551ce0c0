use std::fmt;

use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{format_rational, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => write!(f, "A"),
            Family::B => write!(f, "B"),
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            other => Err(Error::InvalidParams(format!("unknown family {other:?}"))),
        }
    }
}

/// Family tag, number of particles and the couplings, all exact.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Params {
    family: Family,
    n: usize,
    #[serde(with = "super::rational::serde_str")]
    g0: Rational,
    #[serde(with = "super::rational::serde_str")]
    g1: Rational,
    #[serde(with = "super::rational::serde_str")]
    omega: Rational,
}

pub const MAX_VARIABLES: usize = 8;

impl Params {
    pub fn new(
        family: Family,
        n: usize,
        g0: Rational,
        g1: Rational,
        omega: Rational,
    ) -> Result<Self> {
        if n == 0 || n > MAX_VARIABLES {
            return Err(Error::InvalidParams(format!(
                "n must lie in 1..={MAX_VARIABLES}, got {n}"
            )));
        }
        if g0.is_negative() {
            return Err(Error::InvalidParams("g0 must be nonnegative".into()));
        }
        if g1.is_negative() {
            return Err(Error::InvalidParams("g1 must be nonnegative".into()));
        }
        if !omega.is_positive() {
            return Err(Error::InvalidParams("omega must be positive".into()));
        }
        if family == Family::A && !g1.is_zero() {
            return Err(Error::InvalidParams(
                "g1 is only meaningful for family B".into(),
            ));
        }
        Ok(Params {
            family,
            n,
            g0,
            g1,
            omega,
        })
    }

    pub fn type_a(n: usize, g0: Rational, omega: Rational) -> Result<Self> {
        Self::new(Family::A, n, g0, Rational::zero(), omega)
    }

    pub fn type_b(n: usize, g0: Rational, g1: Rational, omega: Rational) -> Result<Self> {
        Self::new(Family::B, n, g0, g1, omega)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn g0(&self) -> &Rational {
        &self.g0
    }

    pub fn g1(&self) -> &Rational {
        &self.g1
    }

    pub fn omega(&self) -> &Rational {
        &self.omega
    }

    pub fn is_even(&self) -> bool {
        self.family == Family::B
    }

    /// Same couplings with a different particle number.
    pub fn with_n(&self, n: usize) -> Result<Self> {
        Self::new(
            self.family,
            n,
            self.g0.clone(),
            self.g1.clone(),
            self.omega.clone(),
        )
    }

    /// `(g0, g1)` as machine integers, required by the Gram oracle.
    pub fn integer_couplings(&self) -> Result<(u32, u32)> {
        let conv = |q: &Rational, name: &str| {
            if q.is_integer() {
                q.numer()
                    .to_u32()
                    .ok_or_else(|| Error::InvalidParams(format!("{name} too large")))
            } else {
                Err(Error::InvalidParams(format!(
                    "{name} = {} is not an integer; the Gram oracle needs integer couplings",
                    format_rational(q)
                )))
            }
        };
        Ok((conv(&self.g0, "g0")?, conv(&self.g1, "g1")?))
    }

    pub fn couplings_label(&self) -> String {
        match self.family {
            Family::A => format!("g0={}", format_rational(&self.g0)),
            Family::B => format!(
                "g0={},g1={}",
                format_rational(&self.g0),
                format_rational(&self.g1)
            ),
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} n={} {} omega={}",
            self.family,
            self.n,
            self.couplings_label(),
            format_rational(&self.omega)
        )
    }
}
