//! Brute-force reference computations for cross-checking the main
//! algorithms. Everything here works from definitions over explicit weight
//! caps: no certificates, no strips, no lower-set helpers.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::geom::{point_limit, Cone, IntPoint};
use crate::semigroup::CSemigroup;

/// Cone points of weight at most `cap`, by scanning the box `[0, cap]^p`
/// (every cone here sits inside the nonnegative orthant).
fn cone_points(cone: &Cone, cap: i64) -> Result<Vec<IntPoint>> {
    let p = cone.dim();
    let side = (cap.max(0) + 1) as usize;
    let limit = point_limit();
    if side.checked_pow(p as u32).is_none_or(|n| n > limit) {
        return Err(Error::CapacityExceeded { limit });
    }
    let mut out = Vec::new();
    let mut c = vec![0i64; p];
    loop {
        if c.iter().sum::<i64>() <= cap {
            let x = IntPoint::new(&c)?;
            if cone.contains(&x)? {
                out.push(x);
            }
        }
        let mut i = 0;
        while i < p {
            c[i] += 1;
            if c[i] <= cap {
                break;
            }
            c[i] = 0;
            i += 1;
        }
        if i == p {
            break;
        }
    }
    out.sort();
    Ok(out)
}

fn in_cone(cone: &Cone, x: &IntPoint) -> bool {
    cone.contains(x).unwrap_or(false)
}

/// Whether `x` is a nonnegative integer combination of `generators`, by
/// growing the set of reachable points one weight at a time up to `cap`.
pub fn oracle_member(generators: &[IntPoint], x: &IntPoint, cap: i64) -> Result<bool> {
    if x.weight() > cap {
        return Err(Error::CapTooSmall { cap, reason: format!("target {x} has weight {}", x.weight()) });
    }
    if let Some(g) = generators.iter().find(|g| g.dim() != x.dim()) {
        return Err(Error::DimensionMismatch { expected: x.dim(), found: g.dim() });
    }
    let gens: Vec<IntPoint> = generators.iter().filter(|g| g.weight() > 0).copied().collect();
    let limit = point_limit();
    let mut by_weight: Vec<HashSet<IntPoint>> = vec![HashSet::new(); cap as usize + 1];
    by_weight[0].insert(IntPoint::zero(x.dim()));
    let mut total = 1;
    for w in 1..=cap as usize {
        let mut here = HashSet::new();
        for g in &gens {
            let gw = g.weight() as usize;
            if gw <= w {
                here.extend(by_weight[w - gw].iter().map(|y| *y + *g));
            }
        }
        total += here.len();
        if total > limit {
            return Err(Error::CapacityExceeded { limit });
        }
        by_weight[w] = here;
    }
    Ok(by_weight[x.weight() as usize].contains(x))
}

/// Smallest cap the pairwise scan of [`oracle_minimals`] accepts:
/// `max(2, p)` times the largest gap weight plus the ray weights.
pub fn minimals_cap(s: &CSemigroup) -> i64 {
    let rays: i64 = s.cone().rays().iter().map(IntPoint::weight).sum();
    (s.dim().max(2) as i64) * s.max_gap_weight() + rays
}

/// Minimal elements of `S \ {0}` under the induced order, by comparing every
/// pair of elements up to weight `cap`.
pub fn oracle_minimals(s: &CSemigroup, cap: i64) -> Result<Vec<IntPoint>> {
    let need = minimals_cap(s);
    if cap < need {
        return Err(Error::CapTooSmall { cap, reason: format!("minimal generators may reach weight {need}") });
    }
    let gaps: HashSet<IntPoint> = s.gaps().iter().copied().collect();
    let elems: Vec<IntPoint> = cone_points(s.cone(), cap)?
        .into_iter()
        .filter(|x| !x.is_zero() && !gaps.contains(x))
        .collect();
    let set: HashSet<IntPoint> = elems.iter().copied().collect();
    Ok(elems
        .iter()
        .filter(|x| !elems.iter().any(|y| y != *x && set.contains(&(**x - *y))))
        .copied()
        .collect())
}

/// Gaps not below any other gap in the cone order.
pub fn oracle_frobenius_set(s: &CSemigroup) -> Vec<IntPoint> {
    let g = s.gaps();
    g.iter().filter(|h| !g.iter().any(|k| k != *h && in_cone(s.cone(), &(*k - **h)))).copied().collect()
}

/// Gaps `a` with `a + x` in S for every nonzero `x` in S. Elements above
/// the largest gap weight keep `a + x` above it, so they need no check.
pub fn oracle_pseudo_frobenius(s: &CSemigroup) -> Result<Vec<IntPoint>> {
    let gaps: HashSet<IntPoint> = s.gaps().iter().copied().collect();
    let elems: Vec<IntPoint> = cone_points(s.cone(), s.max_gap_weight())?
        .into_iter()
        .filter(|x| !x.is_zero() && !gaps.contains(x))
        .collect();
    Ok(s.gaps().iter().filter(|a| elems.iter().all(|x| !gaps.contains(&(**a + *x)))).copied().collect())
}

/// `{a in S : a - b is a gap}` by scanning all cone points up to the
/// largest possible weight.
pub fn oracle_apery(s: &CSemigroup, b: &IntPoint) -> Result<Vec<IntPoint>> {
    let gaps: HashSet<IntPoint> = s.gaps().iter().copied().collect();
    let pts = cone_points(s.cone(), s.max_gap_weight() + b.weight())?;
    Ok(pts.into_iter().filter(|a| !gaps.contains(a) && gaps.contains(&(*a - *b))).collect())
}

/// Number of cone points strictly between 0 and `h` in the cone order.
fn between(cone: &Cone, h: &IntPoint, pts: &[IntPoint]) -> usize {
    pts.iter()
        .filter(|a| a.weight() < h.weight() && !a.is_zero() && in_cone(cone, &(*h - **a)))
        .count()
}

/// A gap h of a genus-g semigroup splits the points strictly below it into
/// pairs `{a, h - a}`, each needing its own gap.
fn may_be_gap(n_between: usize, genus: usize) -> bool {
    n_between.div_ceil(2) < genus
}

/// All gap sets of size `genus` over `cone` whose complement is closed,
/// drawn from cone points of weight at most `cap`.
///
/// The cap is checked: every point in the top band of width `sum w(r_i)`
/// must be ruled out as a gap, and points above the band have even more
/// points below them.
pub fn oracle_all_gapsets(cone: &Cone, genus: usize, cap: i64) -> Result<Vec<Vec<IntPoint>>> {
    let band: i64 = cone.rays().iter().map(IntPoint::weight).sum();
    if cap < band {
        return Err(Error::CapTooSmall { cap, reason: format!("cap must reach the ray weight sum {band}") });
    }
    let pts = cone_points(cone, cap)?;
    if genus > 0 {
        if let Some(h) = pts.iter().find(|h| h.weight() > cap - band && may_be_gap(between(cone, h, &pts), genus)) {
            return Err(Error::CapTooSmall { cap, reason: format!("{h} could still be a gap at genus {genus}") });
        }
    }
    let cands: Vec<IntPoint> = pts
        .iter()
        .filter(|h| !h.is_zero() && may_be_gap(between(cone, h, &pts), genus))
        .copied()
        .collect();
    let mut out = Vec::new();
    let mut pick = Vec::with_capacity(genus);
    choose(&cands, genus, 0, &mut pick, &mut |set| {
        if closed(cone, &pts, set) {
            out.push(set.to_vec());
        }
    });
    out.sort();
    Ok(out)
}

fn choose(cands: &[IntPoint], k: usize, from: usize, pick: &mut Vec<IntPoint>, f: &mut impl FnMut(&[IntPoint])) {
    if pick.len() == k {
        f(pick);
        return;
    }
    for i in from..cands.len() {
        if cands.len() - i < k - pick.len() {
            break;
        }
        pick.push(cands[i]);
        choose(cands, k, i + 1, pick, f);
        pick.pop();
    }
}

/// No gap is a sum of two non-gaps.
fn closed(cone: &Cone, pts: &[IntPoint], gaps: &[IntPoint]) -> bool {
    let set: BTreeSet<IntPoint> = gaps.iter().copied().collect();
    gaps.iter().all(|h| {
        pts.iter().all(|a| {
            let b = *h - *a;
            a.is_zero() || b.is_zero() || !in_cone(cone, &b) || set.contains(a) || set.contains(&b)
        })
    })
}
