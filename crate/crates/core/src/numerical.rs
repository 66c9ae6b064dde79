//! Numerical semigroups (cofinite submonoids of N) and cofinite subsets of N.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A numerical semigroup, stored by its finite gap set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NumericalSemigroup {
    gaps: Vec<u64>,
}

impl NumericalSemigroup {
    /// N itself.
    pub fn naturals() -> Self {
        NumericalSemigroup { gaps: Vec::new() }
    }

    pub fn from_gaps(mut gaps: Vec<u64>) -> Result<Self> {
        gaps.sort_unstable();
        gaps.dedup();
        if gaps.first() == Some(&0) {
            return Err(Error::InvalidNumerical("0 cannot be a gap".into()));
        }
        let s = NumericalSemigroup { gaps };
        for &h in &s.gaps {
            if let Some(a) = (1..=h / 2).find(|&a| s.contains(a) && s.contains(h - a)) {
                return Err(Error::InvalidNumerical(format!("{h} = {a} + {} with both summands in the semigroup", h - a)));
            }
        }
        Ok(s)
    }

    /// The submonoid of N generated by `gens`; their gcd must be 1.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        let gens: Vec<u64> = gens.iter().copied().filter(|&g| g > 0).collect();
        let g = gens.iter().fold(0u64, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(Error::InvalidNumerical(format!("generators have gcd {g}")));
        }
        let m = *gens.iter().min().expect("gcd 1 implies a generator");
        let mut member = vec![true];
        let mut gaps = Vec::new();
        let mut run = 1; // the origin
        let mut n = 0u64;
        // once m consecutive members are found everything beyond is a member
        while run < m {
            n += 1;
            let is = gens.iter().any(|&a| a <= n && member[(n - a) as usize]);
            member.push(is);
            if is {
                run += 1;
            } else {
                run = 0;
                gaps.push(n);
            }
        }
        Ok(NumericalSemigroup { gaps })
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    pub fn contains(&self, n: u64) -> bool {
        self.gaps.binary_search(&n).is_err()
    }

    /// Largest gap, or -1 for N.
    pub fn frobenius(&self) -> i64 {
        self.gaps.last().map_or(-1, |&g| g as i64)
    }

    pub fn conductor(&self) -> u64 {
        (self.frobenius() + 1) as u64
    }

    /// Least nonzero element.
    pub fn multiplicity(&self) -> u64 {
        (1..).find(|&n| self.contains(n)).expect("cofinite")
    }

    pub fn minimal_generators(&self) -> Vec<u64> {
        let bound = self.conductor() + self.multiplicity();
        (1..=bound)
            .filter(|&x| self.contains(x) && !(1..=x / 2).any(|a| self.contains(a) && self.contains(x - a)))
            .collect()
    }

    pub fn embedding_dimension(&self) -> usize {
        self.minimal_generators().len()
    }

    /// Gaps h with h + s in the semigroup for every nonzero element s.
    pub fn pseudo_frobenius(&self) -> Vec<u64> {
        let gens = self.minimal_generators();
        self.gaps.iter().copied().filter(|&h| gens.iter().all(|&m| self.contains(h + m))).collect()
    }

    /// Elements below the conductor.
    pub fn sporadic(&self) -> Vec<u64> {
        (0..self.conductor()).filter(|&n| self.contains(n)).collect()
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.minimal_generators().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

/// N minus a finite set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CofiniteNat {
    excluded: Vec<u64>,
}

impl CofiniteNat {
    pub fn new(mut excluded: Vec<u64>) -> Self {
        excluded.sort_unstable();
        excluded.dedup();
        CofiniteNat { excluded }
    }

    pub fn excluded(&self) -> &[u64] {
        &self.excluded
    }

    pub fn contains(&self, n: u64) -> bool {
        self.excluded.binary_search(&n).is_err()
    }

    /// First witness `(a, b)` with a, b in the set and a + b outside it.
    pub fn addition_failure(&self) -> Option<(u64, u64)> {
        for &e in &self.excluded {
            for a in 0..=e / 2 {
                if self.contains(a) && self.contains(e - a) {
                    return Some((a, e - a));
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_five() {
        let s = NumericalSemigroup::from_generators(&[3, 5]).unwrap();
        assert_eq!(s.gaps(), &[1, 2, 4, 7]);
        assert_eq!(s.frobenius(), 7);
        assert_eq!(s.conductor(), 8);
        assert_eq!(s.multiplicity(), 3);
        assert_eq!(s.minimal_generators(), vec![3, 5]);
        // 4 + 3 = 7 is a gap
        assert_eq!(s.pseudo_frobenius(), vec![7]);
        assert_eq!(s.sporadic(), vec![0, 3, 5, 6]);
        assert_eq!(NumericalSemigroup::from_gaps(vec![7, 4, 2, 1]).unwrap(), s);
    }

    #[test]
    fn naturals_and_degenerate_inputs() {
        let n = NumericalSemigroup::naturals();
        assert_eq!(n.frobenius(), -1);
        assert_eq!(n.conductor(), 0);
        assert_eq!(n.multiplicity(), 1);
        assert_eq!(n.minimal_generators(), vec![1]);
        assert_eq!(NumericalSemigroup::from_generators(&[1, 5]).unwrap(), n);
        assert!(NumericalSemigroup::from_generators(&[2, 4]).is_err());
        assert!(NumericalSemigroup::from_gaps(vec![2]).is_err());
        assert!(NumericalSemigroup::from_gaps(vec![1, 3]).is_ok());
        assert!(NumericalSemigroup::from_gaps(vec![0]).is_err());
    }

    #[test]
    fn four_six_nine() {
        let s = NumericalSemigroup::from_generators(&[4, 6, 9]).unwrap();
        assert_eq!(s.gaps(), &[1, 2, 3, 5, 7, 11]);
        assert_eq!(s.minimal_generators(), vec![4, 6, 9]);
    }

    #[test]
    fn cofinite_addition_failure() {
        let w = CofiniteNat::new(vec![4]);
        assert!(w.contains(0) && !w.contains(4));
        assert_eq!(w.addition_failure(), Some((1, 3)));
        assert_eq!(CofiniteNat::new(vec![]).addition_failure(), None);
    }
}
