//! Wilf-type counts and exhaustive enumeration of C-semigroups by genus.
//!
//! `c(S)` counts the cone points lying below some gap, `n(S)` the elements
//! of S among them and `e(S)` the minimal generators; the extended Wilf
//! inequality reads `e n >= p c`.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{point_limit, Cone, IntPoint};
use crate::semigroup::{CSemigroup, Order};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WilfReport {
    pub e: u64,
    pub n: u64,
    pub c: u64,
    pub p: u64,
    pub margin: i64,
    pub holds: bool,
}

/// Report with the cone order in `c` and `n`.
pub fn wilf_report(s: &CSemigroup) -> WilfReport {
    wilf_report_with(s, Order::Cone)
}

/// Report with lower sets taken under `order`. The induced order drops the
/// origin from every lower set, so it makes `n = 0` whenever there are gaps.
pub fn wilf_report_with(s: &CSemigroup, order: Order) -> WilfReport {
    let mut below = BTreeSet::new();
    for h in s.gaps() {
        for a in s.cone().lower_set(h) {
            let keep = match order {
                Order::Cone => true,
                Order::Induced => s.member(&(*h - a)).unwrap_or(false),
            };
            if keep {
                below.insert(a);
            }
        }
    }
    let c = below.len() as u64;
    let n = below.iter().filter(|a| !s.is_gap(a)).count() as u64;
    let e = s.minimal_generators().len() as u64;
    let p = s.dim() as u64;
    let margin = (e * n) as i64 - (p * c) as i64;
    WilfReport { e, n, c, p, margin, holds: margin >= 0 }
}

/// All semigroups of one genus, sorted by gap list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusLevel {
    pub genus: usize,
    pub semigroups: Vec<CSemigroup>,
}

impl GenusLevel {
    pub fn count(&self) -> usize {
        self.semigroups.len()
    }
}

/// Children in the semigroup tree: remove a minimal generator beyond the
/// canonically largest gap. Each such removal keeps the complement closed
/// and its gap list sorted.
pub fn children(s: &CSemigroup) -> Vec<CSemigroup> {
    let last = s.gaps().last().copied();
    s.minimal_generators()
        .into_iter()
        .filter(|m| last.is_none_or(|g| *m > g))
        .map(|m| {
            let mut gaps = s.gaps().to_vec();
            gaps.push(m);
            CSemigroup::from_sorted_unchecked(*s.cone(), gaps)
        })
        .collect()
}

fn next_level(level: &[CSemigroup]) -> Result<Vec<CSemigroup>> {
    let mut next: Vec<CSemigroup> = level.par_iter().flat_map_iter(children).collect();
    let limit = point_limit();
    if next.len() > limit {
        return Err(Error::CapacityExceeded { limit });
    }
    next.par_sort_unstable_by(|a, b| a.key().cmp(b.key()));
    Ok(next)
}

/// Walks the tree level by level, handing each level to `visit`.
fn walk(cone: &Cone, g_max: usize, mut visit: impl FnMut(usize, &[CSemigroup])) -> Result<()> {
    let mut level = vec![CSemigroup::whole(*cone)];
    for g in 0..=g_max {
        visit(g, &level);
        if g < g_max {
            level = next_level(&level)?;
        }
    }
    Ok(())
}

/// Every C-semigroup over `cone` with genus at most `g_max`. Runs on the
/// current rayon pool.
pub fn enumerate_genus(cone: &Cone, g_max: usize) -> Result<Vec<GenusLevel>> {
    let mut out = Vec::with_capacity(g_max + 1);
    walk(cone, g_max, |genus, level| out.push(GenusLevel { genus, semigroups: level.to_vec() }))?;
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_genus: usize,
    pub order: Order,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl SweepConfig {
    pub fn new(max_genus: usize) -> Self {
        SweepConfig { max_genus, order: Order::Cone, jobs: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub gaps: Vec<IntPoint>,
    pub report: WilfReport,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepSummary {
    pub cone: Cone,
    pub max_genus: usize,
    pub order: Order,
    pub counts: Vec<usize>,
    /// Smallest margin at each genus.
    pub min_margins: Vec<i64>,
    pub counterexamples: Vec<Counterexample>,
}

impl SweepSummary {
    /// Smallest margin over every enumerated semigroup.
    pub fn min_margin(&self) -> i64 {
        self.min_margins.iter().copied().min().unwrap_or(0)
    }

    /// Report as a JSON value; object keys come out sorted, so the text is
    /// stable across runs.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "cone": self.cone,
            "max_genus": self.max_genus,
            "order": self.order,
            "counts": self.counts,
            "min_margin": self.min_margin(),
            "min_margins": self.min_margins,
            "counterexamples": self.counterexamples,
        })
    }
}

/// Runs the Wilf check on every semigroup of genus at most `max_genus`.
pub fn wilf_sweep(cone: &Cone, cfg: &SweepConfig) -> Result<SweepSummary> {
    match cfg.jobs {
        Some(jobs) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.max(1))
                .build()
                .map_err(|e| Error::Parse(format!("thread pool: {e}")))?;
            pool.install(|| sweep_in_pool(cone, cfg))
        }
        None => sweep_in_pool(cone, cfg),
    }
}

fn sweep_in_pool(cone: &Cone, cfg: &SweepConfig) -> Result<SweepSummary> {
    let mut summary = SweepSummary {
        cone: *cone,
        max_genus: cfg.max_genus,
        order: cfg.order,
        counts: Vec::new(),
        min_margins: Vec::new(),
        counterexamples: Vec::new(),
    };
    walk(cone, cfg.max_genus, |_, level| {
        let reports: Vec<WilfReport> = level.par_iter().map(|s| wilf_report_with(s, cfg.order)).collect();
        summary.counts.push(level.len());
        summary.min_margins.push(reports.iter().map(|r| r.margin).min().unwrap_or(0));
        for (s, r) in level.iter().zip(&reports) {
            if !r.holds {
                summary.counterexamples.push(Counterexample { gaps: s.gaps().to_vec(), report: *r });
            }
        }
    })?;
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerical::NumericalSemigroup;

    fn pts(v: &[(i64, i64)]) -> Vec<IntPoint> {
        v.iter().map(|&(x, y)| IntPoint::xy(x, y)).collect()
    }

    fn diag() -> Cone {
        Cone::rays2d(IntPoint::xy(1, 0), IntPoint::xy(1, 1)).unwrap()
    }

    fn counts(cone: &Cone, g: usize) -> Vec<usize> {
        enumerate_genus(cone, g).unwrap().iter().map(GenusLevel::count).collect()
    }

    #[test]
    fn report_for_s_a_is_tight() {
        let s = CSemigroup::new(diag(), pts(&[(1, 1), (2, 2)])).unwrap();
        let r = wilf_report(&s);
        assert_eq!((r.e, r.n, r.c, r.p, r.margin, r.holds), (6, 1, 3, 2, 0, true));
    }

    #[test]
    fn report_for_genus_zero() {
        let r = wilf_report(&CSemigroup::whole(Cone::rays2d(IntPoint::xy(2, 1), IntPoint::xy(1, 3)).unwrap()));
        assert_eq!((r.e, r.n, r.c, r.margin, r.holds), (4, 0, 0, 0, true));
    }

    #[test]
    fn one_dimensional_reports_match_classical_wilf() {
        for gens in [&[2u64, 3][..], &[3, 5], &[4, 6, 9]] {
            let ns = NumericalSemigroup::from_generators(gens).unwrap();
            let gaps = ns.gaps().iter().map(|&g| IntPoint::n(g as i64)).collect();
            let s = CSemigroup::new(Cone::full(1).unwrap(), gaps).unwrap();
            let r = wilf_report(&s);
            let cond = ns.conductor();
            let below = (0..cond).filter(|&k| ns.contains(k)).count() as u64;
            assert_eq!((r.e, r.n, r.c), (ns.embedding_dimension() as u64, below, cond), "{ns:?}");
        }
    }

    #[test]
    fn induced_order_empties_n() {
        let s = CSemigroup::new(diag(), pts(&[(1, 1), (2, 2)])).unwrap();
        let r = wilf_report_with(&s, Order::Induced);
        assert_eq!(r.n, 0);
        assert!(!r.holds);
    }

    #[test]
    fn genus_counts() {
        assert_eq!(counts(&Cone::full(2).unwrap(), 2), vec![1, 2, 7]);
        assert_eq!(counts(&Cone::full(1).unwrap(), 5), vec![1, 1, 2, 4, 7, 12]);
        assert_eq!(counts(&diag(), 0), vec![1]);
    }

    #[test]
    fn genus_two_over_the_plane() {
        let levels = enumerate_genus(&Cone::full(2).unwrap(), 2).unwrap();
        let got: Vec<Vec<IntPoint>> = levels[2].semigroups.iter().map(|s| s.gaps().to_vec()).collect();
        let mut want = vec![
            pts(&[(1, 0), (2, 0)]),
            pts(&[(1, 0), (3, 0)]),
            pts(&[(1, 0), (0, 1)]),
            pts(&[(1, 0), (1, 1)]),
            pts(&[(0, 1), (0, 2)]),
            pts(&[(0, 1), (0, 3)]),
            pts(&[(0, 1), (1, 1)]),
        ];
        want.iter_mut().for_each(|g| g.sort());
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn levels_are_sorted_and_valid() {
        for level in enumerate_genus(&diag(), 4).unwrap() {
            for w in level.semigroups.windows(2) {
                assert!(w[0].key() < w[1].key());
            }
            for s in &level.semigroups {
                assert_eq!(s.genus(), level.genus);
                assert_eq!(CSemigroup::new(*s.cone(), s.gaps().to_vec()).as_ref(), Ok(s));
            }
        }
    }

    #[test]
    fn sweeps_find_no_counterexample() {
        let sa = CSemigroup::new(diag(), pts(&[(1, 1), (2, 2)])).unwrap();
        assert!(enumerate_genus(&diag(), 2).unwrap()[2].semigroups.contains(&sa));
        for (cone, g) in [(Cone::full(2).unwrap(), 4), (diag(), 4), (Cone::full(1).unwrap(), 8)] {
            let sum = wilf_sweep(&cone, &SweepConfig::new(g)).unwrap();
            assert!(sum.counterexamples.is_empty());
            assert!(sum.min_margin() >= 0);
        }
    }

    #[test]
    fn sweep_is_schedule_independent() {
        let cone = Cone::full(2).unwrap();
        let mut cfg = SweepConfig::new(4);
        cfg.jobs = Some(1);
        let a = wilf_sweep(&cone, &cfg).unwrap().to_json().to_string();
        cfg.jobs = Some(4);
        let b = wilf_sweep(&cone, &cfg).unwrap().to_json().to_string();
        assert_eq!(a, b);
    }
}
