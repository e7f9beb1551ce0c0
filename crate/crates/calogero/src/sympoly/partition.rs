use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing vector of nonnegative integers of fixed length `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidParams(
                "partition must have at least one part".into(),
            ));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParams(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn zero(n: usize) -> Self {
        Partition(vec![0; n])
    }

    /// Parses `"2,1,0"`; shorter inputs are padded with zeros up to `n`.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let mut parts = Vec::new();
        for tok in s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
        {
            let v: u32 = tok
                .parse()
                .map_err(|_| Error::InvalidParams(format!("bad partition entry {tok:?}")))?;
            parts.push(v);
        }
        if parts.len() > n {
            if parts[n..].iter().any(|&p| p != 0) {
                return Err(Error::InvalidParams(format!(
                    "partition {s:?} has more than {n} nonzero parts"
                )));
            }
            parts.truncate(n);
        }
        parts.resize(n, 0);
        Self::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&p| p == 0)
    }

    /// `λ + e_{plus} − e_{minus}` (0-based index sets), if still a partition.
    pub fn shifted(&self, plus: &[usize], minus: &[usize]) -> Option<Partition> {
        let mut parts: Vec<i64> = self.0.iter().map(|&p| p as i64).collect();
        for &j in plus {
            parts[j] += 1;
        }
        for &j in minus {
            parts[j] -= 1;
        }
        if parts.iter().any(|&p| p < 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Some(Partition(parts.into_iter().map(|p| p as u32).collect()))
    }

    /// Partial-sum comparison; weights need not agree.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        if self.n() != other.n() {
            return Err(Error::InvalidParams("partition lengths differ".into()));
        }
        let (mut a, mut b) = (0u64, 0u64);
        for (x, y) in self.0.iter().zip(&other.0) {
            a += *x as u64;
            b += *y as u64;
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Total order refining dominance: by weight, then lexicographically.
    pub fn graded_cmp(&self, other: &Partition) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.0.cmp(&other.0))
    }

    /// All partitions of `w` with `n` parts (zeros allowed), lexicographically decreasing.
    pub fn with_weight(n: usize, w: u32) -> Vec<Partition> {
        fn rec(n: usize, w: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if prefix.len() == n {
                if w == 0 {
                    out.push(Partition(prefix.clone()));
                }
                return;
            }
            let slots = (n - prefix.len()) as u32;
            for p in (0..=max.min(w)).rev() {
                if p * slots < w {
                    break;
                }
                prefix.push(p);
                rec(n, w - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, w, w, &mut Vec::with_capacity(n), &mut out);
        out
    }

    /// All partitions with `n` parts and weight at most `max_weight`, in graded order.
    pub fn up_to_weight(n: usize, max_weight: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        for w in 0..=max_weight {
            let mut level = Self::with_weight(n, w);
            level.reverse();
            out.extend(level);
        }
        out
    }

    /// Every μ with μ ≤ self and μ ≠ self, in graded order.
    pub fn strictly_below(&self) -> Vec<Partition> {
        Self::up_to_weight(self.n(), self.weight())
            .into_iter()
            .filter(|mu| mu != self && mu.dominance_leq(self).unwrap_or(false))
            .collect()
    }

    pub fn doubled(&self) -> Vec<u32> {
        self.0.iter().map(|p| 2 * p).collect()
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn dominance_examples() {
        assert!(p(&[1, 1]).dominance_leq(&p(&[2, 0])).unwrap());
        assert!(!p(&[2, 0]).dominance_leq(&p(&[1, 1])).unwrap());
        assert!(p(&[1, 0]).dominance_leq(&p(&[2, 0])).unwrap());
        assert!(p(&[1, 0]).dominance_leq(&p(&[1, 0, 0])).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(Partition::with_weight(3, 4).len(), 4);
        assert_eq!(Partition::with_weight(4, 5).len(), 6);
        assert_eq!(Partition::up_to_weight(3, 4).len(), 11);
        assert_eq!(Partition::with_weight(2, 0), vec![p(&[0, 0])]);
    }

    #[test]
    fn strictly_below_includes_lower_weight() {
        let below = p(&[2, 0]).strictly_below();
        assert_eq!(below, vec![p(&[0, 0]), p(&[1, 0]), p(&[1, 1])]);
    }

    #[test]
    fn parse_pads() {
        assert_eq!(Partition::parse("2", 3).unwrap(), p(&[2, 0, 0]));
        assert_eq!(Partition::parse("1,1", 2).unwrap(), p(&[1, 1]));
        assert!(Partition::parse("1,2", 2).is_err());
        assert!(Partition::parse("1,1,1", 2).is_err());
    }

    #[test]
    fn shifting() {
        assert_eq!(p(&[1, 1]).shifted(&[1], &[]), None);
        assert_eq!(p(&[1, 1]).shifted(&[0], &[1]), Some(p(&[2, 0])));
        assert_eq!(p(&[0, 0]).shifted(&[], &[0]), None);
    }
}
