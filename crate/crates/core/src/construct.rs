//! C-semigroups built to order: lower-set removals with prescribed Frobenius
//! set (and hence arbitrarily large quasi-elasticity), and idemaxial
//! semigroups whose extremal rays all carry the same numerical semigroup.

use std::collections::BTreeSet;

use num_rational::Rational64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{Cone, Frame2, IntPoint};
use crate::numerical::NumericalSemigroup;
use crate::semigroup::CSemigroup;

/// Removes the union of the cone-order lower sets of `points` (minus the
/// origin). The complement is closed because `x + y <=_C f` with `y` in the
/// cone forces `x <=_C f`.
pub fn lower_set_semigroup(cone: Cone, points: &[IntPoint]) -> Result<CSemigroup> {
    let mut gaps = BTreeSet::new();
    for f in points {
        if !cone.contains(f)? {
            return Err(Error::PointOutsideCone(*f));
        }
        if f.is_zero() {
            return Err(Error::ZeroPoint);
        }
        gaps.extend(cone.lower_set(f).into_iter().filter(|x| !x.is_zero()));
    }
    CSemigroup::new(cone, gaps.into_iter().collect())
}

/// A semigroup with quasi-elasticity strictly above `target`.
///
/// Removes the lower sets of `r1 + r2` and `n r1`, with `n >= 2` the least
/// integer making `w(n r1) / w(r1 + r2) > target`. The two points are
/// incomparable, so they form the Frobenius set.
pub fn high_elasticity(cone: Cone, target: Rational64) -> Result<CSemigroup> {
    let f = cone.frame().ok_or(Error::UnsupportedDimension(cone.dim()))?;
    let low = f.r1 + f.r2;
    let ratio = target * Rational64::from(low.weight()) / Rational64::from(f.r1.weight());
    let n = (ratio.floor().to_integer() + 1).max(2);
    lower_set_semigroup(cone, &[low, f.r1.scale(n)])
}

/// A planar cone and the numerical semigroup to repeat on both rays.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdemaxialSpec {
    cone: Cone,
    frame: Frame2,
    pattern: NumericalSemigroup,
}

impl IdemaxialSpec {
    pub fn new(cone: Cone, pattern: NumericalSemigroup) -> Result<Self> {
        let frame = cone.frame().ok_or(Error::UnsupportedDimension(cone.dim()))?;
        Ok(IdemaxialSpec { cone, frame, pattern })
    }

    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    pub fn pattern(&self) -> &NumericalSemigroup {
        &self.pattern
    }

    /// `alpha + beta` in ray coordinates.
    pub fn level(&self, x: &IntPoint) -> Rational64 {
        Rational64::new(self.level_num(x), self.frame.det)
    }

    fn level_num(&self, x: &IntPoint) -> i64 {
        self.frame.alpha_num(x) + self.frame.beta_num(x)
    }

    /// Integral level of x, if any.
    fn integral_level(&self, x: &IntPoint) -> Option<u64> {
        let n = self.level_num(x);
        (n % self.frame.det == 0).then(|| (n / self.frame.det) as u64)
    }

    fn is_element(&self, x: &IntPoint) -> bool {
        let frob = self.pattern.frobenius();
        match self.integral_level(x) {
            Some(l) if self.pattern.contains(l) => true,
            _ => self.level(x) > Rational64::from(frob),
        }
    }

    /// Cone points on or below the Frobenius level.
    fn points_below_frobenius(&self) -> Vec<IntPoint> {
        let frob = self.pattern.frobenius();
        if frob < 0 {
            return Vec::new();
        }
        let reach = frob * self.frame.r1.weight().max(self.frame.r2.weight());
        let pts = self.cone.points_up_to(reach).expect("region below the Frobenius level is small");
        pts.into_iter().filter(|x| self.level(x) <= Rational64::from(frob)).collect()
    }
}

/// Cone points whose level is in the pattern, plus everything strictly above
/// the pattern's Frobenius level.
pub fn idemaxial(spec: &IdemaxialSpec) -> Result<CSemigroup> {
    let gaps: Vec<IntPoint> = spec.points_below_frobenius().into_iter().filter(|x| !spec.is_element(x)).collect();
    CSemigroup::new(spec.cone, gaps)
}

/// Level band `(c - m, c)` from the pattern's conductor and multiplicity;
/// every Frobenius-set element of the idemaxial semigroup lies in it.
pub fn frobenius_band(spec: &IdemaxialSpec) -> Result<(Rational64, Rational64)> {
    if spec.pattern.genus() == 0 {
        return Err(Error::DegeneratePattern);
    }
    let c = spec.pattern.conductor() as i64;
    let m = spec.pattern.multiplicity() as i64;
    Ok((Rational64::from(c - m), Rational64::from(c)))
}

/// A point on a level line that is not pseudo-Frobenius, with the
/// generator pushing it back onto a gap.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PfWitness {
    pub point: IntPoint,
    pub generator: IntPoint,
    pub sum: IntPoint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelLine {
    pub level: u64,
    /// Whether the level is a pseudo-Frobenius number of the pattern.
    pub pf_level: bool,
    pub points: Vec<IntPoint>,
    /// Whether every point of the line is pseudo-Frobenius in S.
    pub contained: bool,
    pub witnesses: Vec<PfWitness>,
}

/// Status of each integral gap level of the pattern inside PF(S).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Default)]
pub struct PfLinesReport {
    pub pattern_pf: Vec<u64>,
    pub semigroup_pf: Vec<IntPoint>,
    pub lines: Vec<LevelLine>,
    /// All lines at pseudo-Frobenius levels of the pattern are contained.
    pub pf_lines_contained: bool,
    /// The line at the pattern's Frobenius level is contained.
    pub frobenius_line_contained: bool,
}

impl PfLinesReport {
    pub fn line(&self, level: u64) -> Option<&LevelLine> {
        self.lines.iter().find(|l| l.level == level)
    }
}

/// Compares the level lines of the pattern's gaps with PF(S). Lines at the
/// pattern's pseudo-Frobenius levels are the ones the containment claim is
/// about; the other gap levels are reported for comparison.
pub fn pf_lines_check(spec: &IdemaxialSpec) -> Result<PfLinesReport> {
    if spec.pattern.genus() == 0 {
        return Ok(PfLinesReport { pf_lines_contained: true, frobenius_line_contained: true, ..Default::default() });
    }
    let s = idemaxial(spec)?;
    let pf = s.pseudo_frobenius()?;
    let gens = s.minimal_generators();
    let pattern_pf = spec.pattern.pseudo_frobenius();
    let lines: Vec<LevelLine> = spec
        .pattern
        .gaps()
        .iter()
        .map(|&level| {
            let points: Vec<IntPoint> =
                s.gaps().iter().filter(|x| spec.integral_level(x) == Some(level)).copied().collect();
            let witnesses: Vec<PfWitness> = points
                .iter()
                .filter(|x| pf.binary_search(x).is_err())
                .map(|&point| {
                    let generator = *gens
                        .iter()
                        .rev()
                        .find(|&&m| s.is_gap(&(point + m)))
                        .expect("a gap outside PF has a generator leading to a gap");
                    PfWitness { point, generator, sum: point + generator }
                })
                .collect();
            LevelLine { level, pf_level: pattern_pf.contains(&level), contained: witnesses.is_empty(), points, witnesses }
        })
        .collect();
    let frob = spec.pattern.frobenius() as u64;
    Ok(PfLinesReport {
        pf_lines_contained: lines.iter().filter(|l| l.pf_level).all(|l| l.contained),
        frobenius_line_contained: lines.iter().find(|l| l.level == frob).is_some_and(|l| l.contained),
        pattern_pf,
        semigroup_pf: pf,
        lines,
    })
}
