//! Exact feasibility of homogeneous strict linear systems `{a : c_i . a > 0}`
//! by Fourier-Motzkin elimination.
//!
//! The systems that arise here have at most three unknowns, so the quadratic
//! row growth of elimination is irrelevant.

use num_integer::Integer;
use num_rational::Ratio;

type Row = Vec<i128>;

fn normalize(mut row: Row) -> Row {
    let g = row.iter().fold(0i128, |acc, &c| acc.gcd(&c));
    if g > 1 {
        row.iter_mut().for_each(|c| *c /= g);
    }
    row
}

/// Eliminates the last unknown. Returns `None` when a row `0 > 0` appears.
fn eliminate(rows: &[Row]) -> Option<Vec<Row>> {
    let k = rows[0].len() - 1;
    let (mut lower, mut upper, mut free) = (Vec::new(), Vec::new(), Vec::new());
    for r in rows {
        match r[k].signum() {
            1 => lower.push(r),
            -1 => upper.push(r),
            _ => free.push(r[..k].to_vec()),
        }
    }
    // a_k > L and a_k < U combine into U - L > 0, still strict
    for l in &lower {
        for u in &upper {
            let (cl, cu) = (l[k], -u[k]);
            free.push((0..k).map(|j| cu * l[j] + cl * u[j]).collect());
        }
    }
    let mut out: Vec<Row> = free.into_iter().map(normalize).collect();
    if out.iter().any(|r| r.iter().all(|&c| c == 0)) {
        return None;
    }
    out.sort();
    out.dedup();
    Some(out)
}

/// Finds a rational vector `a` with `row . a > 0` for every row, or proves
/// none exists. All rows must have the same length `n >= 1`.
pub fn strict_feasible(rows: &[Vec<i64>]) -> Option<Vec<Ratio<i128>>> {
    let n = rows.first()?.len();
    let mut stages: Vec<Vec<Row>> = vec![rows.iter().map(|r| normalize(r.iter().map(|&c| c as i128).collect())).collect()];
    if stages[0].iter().any(|r| r.iter().all(|&c| c == 0)) {
        return None;
    }
    while stages.last().is_some_and(|s| !s.is_empty() && !s[0].is_empty()) {
        let next = eliminate(stages.last().expect("nonempty"))?;
        stages.push(next);
    }
    // back-substitute, choosing each unknown strictly inside its interval
    let mut sol: Vec<Ratio<i128>> = Vec::with_capacity(n);
    for k in 0..n {
        let stage = n - 1 - k;
        let (mut lo, mut hi): (Option<Ratio<i128>>, Option<Ratio<i128>>) = (None, None);
        if let Some(rows) = stages.get(stage) {
            for r in rows {
                let rest: Ratio<i128> = (0..k).map(|j| sol[j] * r[j]).sum();
                let c = r[k];
                if c == 0 {
                    continue;
                }
                let bound = -rest / c;
                if c > 0 {
                    lo = Some(lo.map_or(bound, |b| b.max(bound)));
                } else {
                    hi = Some(hi.map_or(bound, |b| b.min(bound)));
                }
            }
        }
        let one = Ratio::from_integer(1);
        let v = match (lo, hi) {
            (Some(l), Some(h)) => (l + h) / 2,
            (Some(l), None) => l + one,
            (None, Some(h)) => h - one,
            (None, None) => Ratio::from_integer(0),
        };
        sol.push(v);
    }
    Some(sol)
}
