use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalars::{int, rat, CouplingProduct, Family, Params, Rational};
use crate::sympoly::Partition;

/// Disjoint index sets J₊ (raised) and J₋ (lowered), 0-based and sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedIndexSets {
    plus: Vec<usize>,
    minus: Vec<usize>,
}

impl SignedIndexSets {
    pub fn new(mut plus: Vec<usize>, mut minus: Vec<usize>, n: usize) -> Result<Self> {
        plus.sort_unstable();
        minus.sort_unstable();
        plus.dedup();
        minus.dedup();
        if plus.iter().chain(&minus).any(|&j| j >= n) {
            return Err(Error::InvalidParams(format!(
                "index out of range for n = {n}"
            )));
        }
        if plus.iter().any(|j| minus.contains(j)) {
            return Err(Error::InvalidParams("J+ and J- must be disjoint".into()));
        }
        Ok(SignedIndexSets { plus, minus })
    }

    pub fn empty() -> Self {
        SignedIndexSets {
            plus: Vec::new(),
            minus: Vec::new(),
        }
    }

    /// All signed sets on n indices with |J₊| + |J₋| ≤ max_size.
    pub fn all(n: usize, max_size: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let total = 3usize.pow(n as u32);
        for code in 0..total {
            let (mut plus, mut minus) = (Vec::new(), Vec::new());
            let mut c = code;
            for j in 0..n {
                match c % 3 {
                    1 => plus.push(j),
                    2 => minus.push(j),
                    _ => {}
                }
                c /= 3;
            }
            if plus.len() + minus.len() <= max_size {
                out.push(SignedIndexSets { plus, minus });
            }
        }
        out.sort();
        out
    }

    pub fn plus(&self) -> &[usize] {
        &self.plus
    }

    pub fn minus(&self) -> &[usize] {
        &self.minus
    }

    pub fn size(&self) -> usize {
        self.plus.len() + self.minus.len()
    }

    /// K = (J₊ ∪ J₋)^c.
    pub fn complement(&self, n: usize) -> Vec<usize> {
        (0..n)
            .filter(|j| !self.plus.contains(j) && !self.minus.contains(j))
            .collect()
    }

    /// λ + e_{J₊} − e_{J₋}, if it is a partition.
    pub fn target(&self, lambda: &Partition) -> Option<Partition> {
        lambda.shifted(&self.plus, &self.minus)
    }
}

/// Builds the affine-in-g₀ factors of the Pieri coefficients for one λ.
struct Factors<'a> {
    params: &'a Params,
    parts: Vec<Rational>,
}

impl<'a> Factors<'a> {
    fn new(lambda: &Partition, params: &'a Params) -> Result<Self> {
        if lambda.n() != params.n() {
            return Err(Error::InvalidParams(format!(
                "partition {lambda} has {} parts, expected {}",
                lambda.n(),
                params.n()
            )));
        }
        Ok(Factors {
            params,
            parts: lambda.parts().iter().map(|&p| int(p as i64)).collect(),
        })
    }

    /// (k−j)g₀ + λ_j − λ_k as (constant, slope).
    fn gap(&self, j: usize, k: usize) -> (Rational, Rational) {
        (&self.parts[j] - &self.parts[k], int(k as i64 - j as i64))
    }

    /// 1 + g₀/(c + D)·sign, i.e. (c + D + sign·g₀)/(c + D).
    fn pair(
        &self,
        prod: &mut CouplingProduct,
        j: usize,
        k: usize,
        shift: i64,
        sign: i64,
    ) -> Result<()> {
        let (a, b) = self.gap(j, k);
        let a = a + int(shift);
        prod.mul_affine(&a, &(&b + int(sign)));
        prod.div_affine(&a, &b)
    }

    fn slope(&self, j: usize) -> Rational {
        int((self.params.n() - 1 - j) as i64)
    }

    fn raise(&self, prod: &mut CouplingProduct, j: usize) {
        if self.params.family() == Family::B {
            let a = &self.parts[j] + self.params.g1() + rat(1, 2);
            prod.mul_affine(&a, &self.slope(j));
        }
    }

    fn lower(&self, prod: &mut CouplingProduct, j: usize) -> Result<()> {
        prod.mul_affine(&self.parts[j], &self.slope(j));
        if self.params.family() == Family::A {
            prod.div_const(&(int(2) * self.params.omega()))?;
        }
        Ok(())
    }

    fn vhat(&self, sets: &SignedIndexSets, k_set: &[usize]) -> Result<Rational> {
        let mut prod = CouplingProduct::new(self.params.g0());
        for &j in sets.plus() {
            self.raise(&mut prod, j);
            for &m in sets.minus() {
                self.pair(&mut prod, j, m, 0, 1)?;
                self.pair(&mut prod, j, m, 1, 1)?;
            }
            for &k in k_set {
                self.pair(&mut prod, j, k, 0, 1)?;
            }
        }
        for &j in sets.minus() {
            self.lower(&mut prod, j)?;
            for &k in k_set {
                self.pair(&mut prod, j, k, 0, -1)?;
            }
        }
        prod.value()
    }

    fn uhat(&self, k_set: &[usize], p: usize) -> Result<Rational> {
        let mut total = Rational::zero();
        for sub in SignedIndexSets::all(k_set.len(), p) {
            if sub.size() != p {
                continue;
            }
            let plus: Vec<usize> = sub.plus().iter().map(|&i| k_set[i]).collect();
            let minus: Vec<usize> = sub.minus().iter().map(|&i| k_set[i]).collect();
            let rest: Vec<usize> = k_set
                .iter()
                .copied()
                .filter(|l| !plus.contains(l) && !minus.contains(l))
                .collect();
            let mut prod = CouplingProduct::new(self.params.g0());
            for &l in &plus {
                self.raise(&mut prod, l);
                for &m in &minus {
                    self.pair(&mut prod, l, m, 0, 1)?;
                    self.pair(&mut prod, l, m, 1, -1)?;
                }
                for &k in &rest {
                    self.pair(&mut prod, l, k, 0, 1)?;
                }
            }
            for &l in &minus {
                self.lower(&mut prod, l)?;
                for &k in &rest {
                    self.pair(&mut prod, l, k, 0, -1)?;
                }
            }
            total += prod.value()?;
        }
        if p % 2 == 1 {
            total = -total;
        }
        Ok(total)
    }
}

fn check_complement(sets: &SignedIndexSets, k_set: &[usize], n: usize) -> Result<()> {
    if k_set
        .iter()
        .any(|&k| k >= n || sets.plus().contains(&k) || sets.minus().contains(&k))
    {
        return Err(Error::InvalidParams("K must avoid J+ and J-".into()));
    }
    Ok(())
}

/// V̂_j for j > 0 and V̂_{−j} for j < 0, with 1-based |j|.
pub fn vhat_r1(j: i64, lambda: &Partition, params: &Params) -> Result<Rational> {
    let n = params.n();
    let idx = j.unsigned_abs() as usize;
    if idx == 0 || idx > n {
        return Err(Error::InvalidParams(format!(
            "signed index {j} outside ±1..=±{n}"
        )));
    }
    let sets = if j > 0 {
        SignedIndexSets::new(vec![idx - 1], vec![], n)?
    } else {
        SignedIndexSets::new(vec![], vec![idx - 1], n)?
    };
    vhat_general(&sets, &sets.complement(n), lambda, params)
}

/// V̂_{J₊,J₋;K}(λ) for either family.
pub fn vhat_general(
    sets: &SignedIndexSets,
    k_set: &[usize],
    lambda: &Partition,
    params: &Params,
) -> Result<Rational> {
    check_complement(sets, k_set, params.n())?;
    Factors::new(lambda, params)?.vhat(sets, k_set)
}

/// Û^B_{K,p}(λ); equal to 1 for p = 0 and to 0 when p exceeds |K|.
pub fn uhat_b(k_set: &[usize], p: usize, lambda: &Partition, params: &Params) -> Result<Rational> {
    if params.family() != Family::B {
        return Err(Error::InvalidParams(
            "Û is defined for family B only".into(),
        ));
    }
    check_complement(&SignedIndexSets::empty(), k_set, params.n())?;
    Factors::new(lambda, params)?.uhat(k_set, p)
}
