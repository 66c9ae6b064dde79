//! C-semigroups stored by their finite gap set, and their order-theoretic
//! invariants: minimal generators, Frobenius set, pseudo-Frobenius set,
//! Apéry sets, Frobenius elements, weight set and quasi-elasticity.

use std::collections::BTreeSet;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{Cone, IntPoint};
use crate::numerical::{CofiniteNat, NumericalSemigroup};
use crate::separation::strict_feasible;

/// Which partial order to take maximal gaps under.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Order {
    /// `x <= y` iff `y - x` lies in the cone.
    #[default]
    Cone,
    /// `x <= y` iff `y - x` lies in the semigroup.
    Induced,
}

impl std::str::FromStr for Order {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cone" => Ok(Order::Cone),
            "induced" => Ok(Order::Induced),
            other => Err(Error::Parse(format!("unknown order '{other}' (expected cone or induced)"))),
        }
    }
}

/// An affine semigroup with finite complement in its cone.
///
/// Invariants (checked by [`CSemigroup::new`]): gaps are distinct nonzero
/// lattice points of the cone, canonically sorted, and the complement of the
/// gaps in the cone is closed under addition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CSemigroup {
    cone: Cone,
    gaps: Vec<IntPoint>,
    max_gap_weight: i64,
}

impl CSemigroup {
    /// Validates a gap set. Duplicates are merged.
    pub fn new(cone: Cone, gaps: Vec<IntPoint>) -> Result<Self> {
        let mut gaps = gaps;
        for g in &gaps {
            if !cone.contains(g)? {
                return Err(Error::GapOutsideCone(*g));
            }
            if g.is_zero() {
                return Err(Error::ZeroGap);
            }
        }
        gaps.sort_unstable();
        gaps.dedup();
        let s = Self::from_sorted_unchecked(cone, gaps);
        s.check_closure()?;
        Ok(s)
    }

    /// The cone itself as a semigroup (genus 0).
    pub fn whole(cone: Cone) -> Self {
        Self::from_sorted_unchecked(cone, Vec::new())
    }

    pub(crate) fn from_sorted_unchecked(cone: Cone, gaps: Vec<IntPoint>) -> Self {
        let max_gap_weight = gaps.iter().map(IntPoint::weight).max().unwrap_or(0);
        CSemigroup { cone, gaps, max_gap_weight }
    }

    fn check_closure(&self) -> Result<()> {
        for &h in &self.gaps {
            for a in self.cone.lower_set(&h) {
                if a.is_zero() || a == h {
                    continue;
                }
                let b = h - a;
                if !self.is_gap(&a) && !self.is_gap(&b) {
                    let (left, right) = if a > b { (a, b) } else { (b, a) };
                    return Err(Error::NotClosed { gap: h, left, right });
                }
            }
        }
        Ok(())
    }

    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    pub fn dim(&self) -> usize {
        self.cone.dim()
    }

    /// Gaps in canonical order.
    pub fn gaps(&self) -> &[IntPoint] {
        &self.gaps
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    pub fn max_gap_weight(&self) -> i64 {
        self.max_gap_weight
    }

    pub fn is_gap(&self, x: &IntPoint) -> bool {
        self.gaps.binary_search(x).is_ok()
    }

    /// `x` in the semigroup: a cone point that is not a gap.
    pub fn member(&self, x: &IntPoint) -> Result<bool> {
        Ok(self.cone.contains(x)? && !self.is_gap(x))
    }

    pub(crate) fn member_unchecked(&self, x: &IntPoint) -> bool {
        self.cone.contains_unchecked(x) && !self.is_gap(x)
    }

    /// Induced order: `x <=_S y` iff `y - x` lies in S.
    pub fn induced_leq(&self, x: &IntPoint, y: &IntPoint) -> Result<bool> {
        if x.dim() != y.dim() {
            return Err(Error::DimensionMismatch { expected: x.dim(), found: y.dim() });
        }
        self.member(&(*y - *x))
    }

    fn leq(&self, order: Order, x: &IntPoint, y: &IntPoint) -> bool {
        let d = *y - *x;
        match order {
            Order::Cone => self.cone.contains_unchecked(&d),
            Order::Induced => self.member_unchecked(&d),
        }
    }

    /// Least k >= 1 with `k * ray` in S, for each extremal ray.
    fn ray_multiplicities(&self) -> Vec<(IntPoint, i64)> {
        self.cone
            .rays()
            .into_iter()
            .map(|r| (r, (1..).find(|&k| !self.is_gap(&r.scale(k))).expect("finitely many gaps")))
            .collect()
    }

    /// Weight bound beyond which no element of S is indecomposable.
    ///
    /// If `x - m_i r_i` lies in the cone, where `m_i r_i` is the first element
    /// of S on ray i, and has weight above every gap, then x is decomposable.
    /// Otherwise every ray coordinate of x is below `m_i`, which bounds its
    /// weight by `sum m_i w(r_i)`.
    pub fn generator_weight_bound(&self) -> i64 {
        let mults = self.ray_multiplicities();
        let along = mults.iter().map(|(r, m)| m * r.weight()).max().unwrap_or(0);
        let corner: i64 = mults.iter().map(|(r, m)| m * r.weight()).sum();
        (self.max_gap_weight + along).max(corner)
    }

    fn decomposable(&self, x: &IntPoint) -> bool {
        self.cone
            .lower_set(x)
            .iter()
            .any(|a| !a.is_zero() && a != x && !self.is_gap(a) && !self.is_gap(&(*x - *a)))
    }

    /// The minimal generating set, i.e. the minimal nonzero elements under
    /// the induced order, in canonical order.
    pub fn minimal_generators(&self) -> Vec<IntPoint> {
        let bound = self.generator_weight_bound();
        let pts = self.cone.points_up_to(bound).expect("generator region is small");
        pts.into_iter()
            .filter(|x| !x.is_zero() && !self.is_gap(x) && !self.decomposable(x))
            .collect()
    }

    /// Maximal gaps under `order` (the cone order gives the Frobenius set).
    pub fn frobenius_set_with(&self, order: Order) -> Vec<IntPoint> {
        self.gaps
            .iter()
            .filter(|h| !self.gaps.iter().any(|k| k != *h && self.leq(order, h, k)))
            .copied()
            .collect()
    }

    /// Maximal gaps under the cone order.
    pub fn frobenius_set(&self) -> Vec<IntPoint> {
        self.frobenius_set_with(Order::Cone)
    }

    /// Gaps `a` with `a + (S \ {0})` inside S. Checking minimal generators is
    /// enough: `a + m1 + m2 = (a + m1) + m2`.
    pub fn pseudo_frobenius(&self) -> Result<Vec<IntPoint>> {
        if self.gaps.is_empty() {
            return Err(Error::EmptyGapSet);
        }
        let gens = self.minimal_generators();
        Ok(self
            .gaps
            .iter()
            .filter(|&&a| gens.iter().all(|&m| self.member_unchecked(&(a + m))))
            .copied()
            .collect())
    }

    /// `Ap(S, b) = {a in S : a - b is a gap}`.
    pub fn apery_set(&self, b: &IntPoint) -> Result<Vec<IntPoint>> {
        if !self.member(b)? {
            return Err(Error::NotAMember(*b));
        }
        if b.is_zero() {
            return Err(Error::ZeroShift);
        }
        let mut out: Vec<IntPoint> = self.gaps.iter().map(|&h| h + *b).filter(|a| !self.is_gap(a)).collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Gap f admits a strictly positive vector `a` with `a.f > a.h` for
    /// every other gap h. Returns the separating vector when it exists.
    pub fn separating_vector(&self, f: &IntPoint) -> Option<Vec<num_rational::Ratio<i128>>> {
        let p = self.dim();
        let mut rows: Vec<Vec<i64>> = (0..p).map(|i| (0..p).map(|j| i64::from(i == j)).collect()).collect();
        rows.extend(self.gaps.iter().filter(|h| *h != f).map(|h| (*f - *h).coords().to_vec()));
        strict_feasible(&rows)
    }

    /// Gaps that are the maximum of the gap set under some positive weight
    /// order (the Frobenius elements).
    pub fn frobenius_elements(&self) -> Result<Vec<IntPoint>> {
        if self.gaps.is_empty() {
            return Err(Error::EmptyGapSet);
        }
        Ok(self.gaps.iter().filter(|f| self.separating_vector(f).is_some()).copied().collect())
    }

    /// Weights t whose level meets S and carries no Frobenius-set element,
    /// returned as the finite set of excluded weights.
    pub fn weight_set(&self) -> CofiniteNat {
        let frob_weights: BTreeSet<u64> = self.frobenius_set().iter().map(|f| f.weight() as u64).collect();
        // every level at or beyond the conductor of the cone's own weight
        // semigroup holds a cone point; beyond the last gap those are in S
        let cone_levels = cone_weight_semigroup(&self.cone);
        let top = self.max_gap_weight.max(cone_levels.conductor() as i64);
        let mut occupied = vec![false; top as usize + 1];
        for x in self.cone.points_up_to(top).expect("bounded scan") {
            if !self.is_gap(&x) {
                occupied[x.weight() as usize] = true;
            }
        }
        let empty = occupied.iter().enumerate().filter(|(_, o)| !**o).map(|(t, _)| t as u64);
        CofiniteNat::new(empty.chain(frob_weights).collect())
    }

    /// `max w(F) / min w(F)` over the Frobenius set.
    pub fn quasi_elasticity(&self) -> Result<Rational64> {
        let w: Vec<i64> = self.frobenius_set().iter().map(IntPoint::weight).collect();
        let (Some(&lo), Some(&hi)) = (w.iter().min(), w.iter().max()) else {
            return Err(Error::EmptyGapSet);
        };
        Ok(Rational64::new(hi, lo))
    }

    /// `{k : k * r_i is a gap}` as a numerical semigroup.
    pub fn ray_restriction(&self, i: usize) -> Result<NumericalSemigroup> {
        let rays = self.cone.rays();
        let r = *rays.get(i).ok_or(Error::InvalidRay { index: i, count: rays.len() })?;
        let gaps = (1..).map(|k| r.scale(k)).take_while(|x| x.weight() <= self.max_gap_weight);
        let gaps: Vec<u64> = gaps.enumerate().filter(|(_, x)| self.is_gap(x)).map(|(k, _)| k as u64 + 1).collect();
        NumericalSemigroup::from_gaps(gaps)
    }

    /// Canonical gap list comparison key, used to order semigroups.
    pub fn key(&self) -> &[IntPoint] {
        &self.gaps
    }
}

/// Weights of the lattice points of a cone, as a numerical semigroup.
pub fn cone_weight_semigroup(cone: &Cone) -> NumericalSemigroup {
    let hilbert = CSemigroup::whole(*cone).minimal_generators();
    let w: Vec<u64> = hilbert.iter().map(|h| h.weight() as u64).collect();
    // a full-dimensional cone holds two lattice points one unit apart
    NumericalSemigroup::from_generators(&w).expect("cone weights have gcd 1")
}

/// JSON form `{"cone": ..., "gaps": [...]}`.
#[derive(Serialize, Deserialize)]
pub struct SemigroupRepr {
    pub cone: Cone,
    pub gaps: Vec<IntPoint>,
}

impl Serialize for CSemigroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SemigroupRepr { cone: self.cone, gaps: self.gaps.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CSemigroup {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = SemigroupRepr::deserialize(d)?;
        CSemigroup::new(r.cone, r.gaps).map_err(serde::de::Error::custom)
    }
}
