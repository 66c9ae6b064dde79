//! Expansion of a finite generating set into its gap set.
//!
//! For a planar cone with primitive rays `r1`, `r2` and ray conductors
//! `c1`, `c2`, membership of `<A>` is decided by a weight-graded table, and
//! the infinite remainder of the cone is certified in three pieces:
//!
//! * the deep region `alpha >= k1, beta >= k2`, once every lattice point of
//!   the box `[k1, 2 k1) x [k2, 2 k2)` is a member (`k_i >= c_i`), because
//!   every deep point is a box point plus multiples of `k1 r1` and `k2 r2`;
//! * the strip `beta < k2`, swept line by line parallel to `r1`: lattice
//!   points on such a line are spaced exactly `r1`, so once a member `t0` is
//!   found every `t >= t0 + c1` is a member as well;
//! * the strip `alpha < k1`, symmetrically along `r2`.

use std::collections::BTreeSet;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::geom::{Cone, Frame2, IntPoint};
use crate::numerical::NumericalSemigroup;
use crate::semigroup::CSemigroup;

/// A cone together with a finite set of nonzero generators inside it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorInput {
    cone: Cone,
    generators: Vec<IntPoint>,
}

impl GeneratorInput {
    pub fn new(cone: Cone, generators: Vec<IntPoint>) -> Result<Self> {
        let mut generators = generators;
        for g in &generators {
            if !cone.contains(g)? {
                return Err(Error::GeneratorOutsideCone(*g));
            }
            if g.is_zero() {
                return Err(Error::ZeroPoint);
            }
        }
        generators.sort_unstable();
        generators.dedup();
        if generators.is_empty() {
            return Err(Error::NoGenerators);
        }
        Ok(GeneratorInput { cone, generators })
    }

    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    pub fn generators(&self) -> &[IntPoint] {
        &self.generators
    }
}

/// Limits that turn non-terminating inputs into `BudgetExceeded`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExpandConfig {
    /// Steps allowed when searching a strip line for its first member.
    pub max_line_steps: i64,
    /// Largest coordinate the membership table may grow to.
    pub max_extent: i64,
}

impl Default for ExpandConfig {
    fn default() -> Self {
        ExpandConfig { max_line_steps: 10_000, max_extent: 4096 }
    }
}

/// Membership of `<A>` on the square `[0, extent]^2`, filled in
/// lexicographic order so that `x - a` is always settled before `x`.
struct Table<'a> {
    cone: Cone,
    gens: &'a [IntPoint],
    extent: i64,
    cells: Vec<bool>,
    max_extent: i64,
}

impl<'a> Table<'a> {
    fn new(cone: Cone, gens: &'a [IntPoint], max_extent: i64) -> Self {
        let mut t = Table { cone, gens, extent: -1, cells: Vec::new(), max_extent };
        t.rebuild(63.min(max_extent));
        t
    }

    fn rebuild(&mut self, extent: i64) {
        let side = (extent + 1) as usize;
        let mut cells = vec![false; side * side];
        for x in 0..=extent {
            for y in 0..=extent {
                let p = IntPoint::xy(x, y);
                let idx = x as usize * side + y as usize;
                cells[idx] = p.is_zero()
                    || (self.cone.contains_unchecked(&p)
                        && self.gens.iter().any(|a| {
                            let (dx, dy) = (x - a.x(), y - a.y());
                            dx >= 0 && dy >= 0 && cells[dx as usize * side + dy as usize]
                        }));
            }
        }
        self.extent = extent;
        self.cells = cells;
    }

    fn member(&mut self, p: &IntPoint) -> Result<bool> {
        let need = p.x().max(p.y());
        if need > self.extent {
            let mut e = self.extent.max(1);
            while e < need {
                e = e * 2 + 1;
            }
            if e > self.max_extent {
                if need > self.max_extent {
                    return Err(Error::BudgetExceeded(format!(
                        "membership table would exceed extent {}",
                        self.max_extent
                    )));
                }
                e = self.max_extent;
            }
            self.rebuild(e);
        }
        let side = (self.extent + 1) as usize;
        Ok(self.cells[p.x() as usize * side + p.y() as usize])
    }
}

/// Expands `<generators>` into a validated C-semigroup.
pub fn expand(g: &GeneratorInput) -> Result<CSemigroup> {
    expand_with(g, &ExpandConfig::default())
}

pub fn expand_with(g: &GeneratorInput, cfg: &ExpandConfig) -> Result<CSemigroup> {
    match g.cone.dim() {
        1 => expand_line(g),
        2 => expand_plane(g, cfg),
        p => Err(Error::UnsupportedDimension(p)),
    }
}

fn expand_line(g: &GeneratorInput) -> Result<CSemigroup> {
    let gens: Vec<u64> = g.generators.iter().map(|x| x.x() as u64).collect();
    let gcd = gens.iter().fold(0u64, |acc, &x| acc.gcd(&x));
    if gcd != 1 {
        return Err(Error::NotCofinite { ray: IntPoint::n(1), gcd });
    }
    let ns = NumericalSemigroup::from_generators(&gens)?;
    CSemigroup::new(g.cone, ns.gaps().iter().map(|&n| IntPoint::n(n as i64)).collect())
}

/// Ray semigroup and its conductor for ray `r`, whose "off-ray" coordinate
/// numerator is `off`.
fn ray_semigroup(
    gens: &[IntPoint],
    ray: IntPoint,
    det: i64,
    off: impl Fn(&IntPoint) -> i64,
    along: impl Fn(&IntPoint) -> i64,
) -> Result<NumericalSemigroup> {
    let on_ray: Vec<u64> = gens.iter().filter(|a| off(a) == 0).map(|a| (along(a) / det) as u64).collect();
    if on_ray.is_empty() {
        return Err(Error::ConeMismatch(ray));
    }
    let gcd = on_ray.iter().fold(0u64, |acc, &x| acc.gcd(&x));
    if gcd != 1 {
        return Err(Error::NotCofinite { ray, gcd });
    }
    NumericalSemigroup::from_generators(&on_ray)
}

/// First lattice point of the cone on the line `normal . x = level`, where
/// `normal` is primitive and `step` moves along the line raising `coord`
/// (the other ray coordinate numerator) by exactly `det`.
fn line_start(normal: [i64; 2], level: i64, step: IntPoint, det: i64, coord: impl Fn(&IntPoint) -> i64) -> IntPoint {
    let e = normal[0].extended_gcd(&normal[1]);
    let sign = e.gcd.signum();
    let base = IntPoint::xy(level * e.x * sign, level * e.y * sign);
    let shift = -Integer::div_floor(&coord(&base), &det);
    base + step.scale(shift)
}

fn expand_plane(g: &GeneratorInput, cfg: &ExpandConfig) -> Result<CSemigroup> {
    let f: Frame2 = g.cone.frame().expect("planar cone");
    let gens = &g.generators;
    let n1 = ray_semigroup(gens, f.r1, f.det, |a| f.beta_num(a), |a| f.alpha_num(a))?;
    let n2 = ray_semigroup(gens, f.r2, f.det, |a| f.alpha_num(a), |a| f.beta_num(a))?;
    let (c1, c2) = (n1.conductor() as i64, n2.conductor() as i64);

    check_cosets(&f, gens)?;

    let mut table = Table::new(g.cone, gens, cfg.max_extent);

    // deep region
    let (mut k1, mut k2) = (c1.max(1), c2.max(1));
    loop {
        if box_in_semigroup(&f, k1, k2, &mut table)? {
            break;
        }
        k1 *= 2;
        k2 *= 2;
    }

    // both strips, swept line by line; a line holds a member iff its level
    // is a sum of generator levels
    let beta_levels = reachable_levels(gens.iter().map(|a| f.beta_num(a)), k2 * f.det);
    let alpha_levels = reachable_levels(gens.iter().map(|a| f.alpha_num(a)), k1 * f.det);
    let mut gaps = BTreeSet::new();
    for j in 0..k2 * f.det {
        let start = line_start(f.n1, j, f.r1, f.det, |x| f.alpha_num(x));
        if !beta_levels[j as usize] {
            return Err(Error::InfiniteGapFamily { start, step: f.r1 });
        }
        gaps.extend(sweep_line(start, f.r1, c1, cfg.max_line_steps, &mut table)?);
    }
    for i in 0..k1 * f.det {
        let start = line_start(f.n2, i, f.r2, f.det, |x| f.beta_num(x));
        if !alpha_levels[i as usize] {
            return Err(Error::InfiniteGapFamily { start, step: f.r2 });
        }
        gaps.extend(sweep_line(start, f.r2, c2, cfg.max_line_steps, &mut table)?);
    }
    CSemigroup::new(g.cone, gaps.into_iter().collect())
}

/// `reachable[i]` iff i (0 <= i < len) is a sum of the positive `levels`.
fn reachable_levels(levels: impl Iterator<Item = i64>, len: i64) -> Vec<bool> {
    let levels: Vec<i64> = levels.filter(|&l| l > 0).collect();
    let mut reach = vec![false; len.max(1) as usize];
    reach[0] = true;
    for i in 1..len {
        reach[i as usize] = levels.iter().any(|&l| l <= i && reach[(i - l) as usize]);
    }
    reach
}

/// Every class of Z^2 modulo the ray lattice must be hit by a sum of
/// generators; a missed class is an infinite family of gaps.
fn check_cosets(f: &Frame2, gens: &[IntPoint]) -> Result<()> {
    let det = f.det;
    if det == 1 {
        return Ok(());
    }
    let class = |a: i64, b: i64| (a.rem_euclid(det) * det + b.rem_euclid(det)) as usize;
    let mut seen = vec![false; (det * det) as usize];
    let mut stack = vec![(0i64, 0i64)];
    seen[0] = true;
    while let Some((a, b)) = stack.pop() {
        for g in gens {
            let (na, nb) = ((a + f.alpha_num(g)).rem_euclid(det), (b + f.beta_num(g)).rem_euclid(det));
            if !seen[class(na, nb)] {
                seen[class(na, nb)] = true;
                stack.push((na, nb));
            }
        }
    }
    for a in 0..det {
        for b in 0..det {
            if let Some(p) = f.point_from_nums(a, b) {
                if !seen[class(a, b)] {
                    return Err(Error::InfiniteGapFamily { start: p, step: f.r1 });
                }
            }
        }
    }
    Ok(())
}

fn box_in_semigroup(f: &Frame2, k1: i64, k2: i64, table: &mut Table<'_>) -> Result<bool> {
    for a in k1 * f.det..2 * k1 * f.det {
        for b in k2 * f.det..2 * k2 * f.det {
            if let Some(p) = f.point_from_nums(a, b) {
                if !table.member(&p)? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Gaps on the lattice line `start + t * step`, t >= 0.
fn sweep_line(start: IntPoint, step: IntPoint, conductor: i64, max_steps: i64, table: &mut Table<'_>) -> Result<Vec<IntPoint>> {
    let mut gaps = Vec::new();
    let mut t = 0;
    let mut p = start;
    while !table.member(&p)? {
        gaps.push(p);
        t += 1;
        if t > max_steps {
            return Err(Error::BudgetExceeded(format!("no member within {max_steps} steps of {start} along {step}")));
        }
        p = p + step;
    }
    for _ in 1..conductor {
        p = p + step;
        if !table.member(&p)? {
            gaps.push(p);
        }
    }
    Ok(gaps)
}

/// Outcome of [`is_csemigroup`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Yes { genus: usize },
    No(Error),
}

/// Decides whether `<generators>` has finite complement in the cone.
/// `BudgetExceeded` and input errors are propagated, not turned into `No`.
pub fn is_csemigroup(g: &GeneratorInput) -> Result<Verdict> {
    match expand(g) {
        Ok(s) => Ok(Verdict::Yes { genus: s.genus() }),
        Err(e @ (Error::NotCofinite { .. } | Error::ConeMismatch(_) | Error::InfiniteGapFamily { .. })) => {
            Ok(Verdict::No(e))
        }
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[(i64, i64)]) -> Vec<IntPoint> {
        v.iter().map(|&(x, y)| IntPoint::xy(x, y)).collect()
    }

    fn diag() -> Cone {
        Cone::rays2d(IntPoint::xy(1, 0), IntPoint::xy(1, 1)).unwrap()
    }

    fn input(c: Cone, v: &[(i64, i64)]) -> GeneratorInput {
        GeneratorInput::new(c, pts(v)).unwrap()
    }

    #[test]
    fn expands_msg_of_s_a() {
        let g = input(diag(), &[(1, 0), (2, 1), (3, 2), (3, 3), (4, 4), (5, 5)]);
        assert_eq!(expand(&g).unwrap().gaps(), pts(&[(1, 1), (2, 2)]).as_slice());
        assert_eq!(is_csemigroup(&g).unwrap(), Verdict::Yes { genus: 2 });
    }

    #[test]
    fn hilbert_basis_generates_the_cone() {
        assert_eq!(expand(&input(diag(), &[(1, 0), (1, 1)])).unwrap().genus(), 0);
        let skew = Cone::rays2d(IntPoint::xy(2, 1), IntPoint::xy(1, 3)).unwrap();
        assert_eq!(expand(&input(skew, &[(2, 1), (1, 3), (1, 1), (1, 2)])).unwrap().genus(), 0);
    }

    #[test]
    fn non_cofinite_ray() {
        let g = input(diag(), &[(2, 0), (1, 1)]);
        assert_eq!(expand(&g), Err(Error::NotCofinite { ray: IntPoint::xy(1, 0), gcd: 2 }));
        assert!(matches!(is_csemigroup(&g).unwrap(), Verdict::No(Error::NotCofinite { .. })));
    }

    #[test]
    fn uncovered_ray() {
        let g = input(diag(), &[(1, 0)]);
        assert_eq!(is_csemigroup(&g).unwrap(), Verdict::No(Error::ConeMismatch(IntPoint::xy(1, 1))));
    }

    #[test]
    fn three_five_on_a_ray_leaves_a_line_uncovered() {
        // (b + 1, b) needs alpha = 1, which no sum of generators reaches
        let g = input(diag(), &[(3, 0), (5, 0), (1, 1)]);
        assert_eq!(
            is_csemigroup(&g).unwrap(),
            Verdict::No(Error::InfiniteGapFamily { start: IntPoint::xy(1, 0), step: IntPoint::xy(1, 1) })
        );
        // adding (4,1) reaches every line
        let g = input(diag(), &[(3, 0), (5, 0), (1, 1), (2, 1), (4, 1)]);
        let s = expand(&g).unwrap();
        assert_eq!(s.ray_restriction(0).unwrap().gaps(), &[1, 2, 4, 7]);
        assert_eq!(s.ray_restriction(1).unwrap().genus(), 0);
    }

    #[test]
    fn missing_coset() {
        // (1,1) is half of r1 + r2 and is never generated
        let c = Cone::rays2d(IntPoint::xy(1, 0), IntPoint::xy(1, 2)).unwrap();
        let g = input(c, &[(1, 0), (1, 2)]);
        assert_eq!(expand(&g), Err(Error::InfiniteGapFamily { start: IntPoint::xy(1, 1), step: IntPoint::xy(1, 0) }));
    }

    #[test]
    fn tiny_budget_is_reported() {
        let g = input(diag(), &[(1, 0), (2, 1), (3, 2), (3, 3), (4, 4), (5, 5)]);
        let cfg = ExpandConfig { max_line_steps: 0, max_extent: 4096 };
        assert!(matches!(expand_with(&g, &cfg), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn numerical_case() {
        let line = Cone::full(1).unwrap();
        let g = GeneratorInput::new(line, vec![IntPoint::n(3), IntPoint::n(5)]).unwrap();
        assert_eq!(expand(&g).unwrap().genus(), 4);
        let g = GeneratorInput::new(line, vec![IntPoint::n(4), IntPoint::n(6)]).unwrap();
        assert!(matches!(expand(&g), Err(Error::NotCofinite { gcd: 2, .. })));
    }

    #[test]
    fn input_validation() {
        assert_eq!(GeneratorInput::new(diag(), vec![]), Err(Error::NoGenerators));
        assert_eq!(
            GeneratorInput::new(diag(), pts(&[(0, 1)])),
            Err(Error::GeneratorOutsideCone(IntPoint::xy(0, 1)))
        );
        let g = GeneratorInput::new(Cone::full(3).unwrap(), vec![IntPoint::new(&[1, 0, 0]).unwrap()]).unwrap();
        assert_eq!(expand(&g), Err(Error::UnsupportedDimension(3)));
    }
}
