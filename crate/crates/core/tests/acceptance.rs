//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Built with `harness = false` so the lines always show.

use std::process::ExitCode;
use std::time::Instant;

use conesemi::cli::run;
use conesemi::construct::{frobenius_band, high_elasticity, idemaxial, pf_lines_check, IdemaxialSpec};
use conesemi::genexp::{expand, GeneratorInput};
use conesemi::oracle::{minimals_cap, oracle_all_gapsets, oracle_minimals};
use conesemi::wilf::{enumerate_genus, wilf_report, wilf_sweep, SweepConfig};
use conesemi::{CSemigroup, Cone, IntPoint, NumericalSemigroup};
use num_rational::Rational64;

fn pts(v: &[(i64, i64)]) -> Vec<IntPoint> {
    let mut out: Vec<IntPoint> = v.iter().map(|&(x, y)| IntPoint::xy(x, y)).collect();
    out.sort();
    out
}

fn plane() -> Cone {
    Cone::full(2).unwrap()
}

fn diag() -> Cone {
    Cone::rays2d(IntPoint::xy(1, 0), IntPoint::xy(1, 1)).unwrap()
}

fn skew() -> Cone {
    Cone::rays2d(IntPoint::xy(2, 1), IntPoint::xy(1, 3)).unwrap()
}

fn s_a() -> CSemigroup {
    CSemigroup::new(diag(), pts(&[(1, 1), (2, 2)])).unwrap()
}

fn ns(gens: &[u64]) -> NumericalSemigroup {
    NumericalSemigroup::from_generators(gens).unwrap()
}

fn label(cone: &Cone) -> String {
    serde_json::to_string(cone).unwrap()
}

fn all_upto(cone: &Cone, g: usize) -> Vec<CSemigroup> {
    enumerate_genus(cone, g).unwrap().into_iter().flat_map(|l| l.semigroups).collect()
}

/// Collects failed sub-checks of one criterion.
#[derive(Default)]
struct Check {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Check {
    fn expect(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn note(&mut self, what: impl Into<String>) {
        self.notes.push(what.into());
    }
}

fn criterion_1(c: &mut Check) {
    let s = s_a();
    c.expect(s.frobenius_set() == pts(&[(2, 2)]), format!("F(S_A) = {:?}", s.frobenius_set()));
    let pf = s.pseudo_frobenius().unwrap();
    let h = IntPoint::xy(1, 1);
    c.expect(pf.contains(&h), "(1,1) missing from PF(S_A)");
    c.expect(!s.frobenius_set().contains(&h), "(1,1) in F(S_A)");
    let w = s.weight_set();
    c.expect(w.excluded() == [4], format!("W excludes {:?}", w.excluded()));
}

fn criterion_2(c: &mut Check) {
    let gaps = pts(&[(1, 0), (1, 1), (2, 0), (2, 2), (3, 0), (3, 1), (4, 0)]);
    let s = match CSemigroup::new(diag(), gaps) {
        Ok(s) => s,
        Err(e) => return c.expect(false, format!("S_B rejected: {e}")),
    };
    let f = s.frobenius_set();
    let fe = s.frobenius_elements().unwrap();
    c.expect(fe == pts(&[(4, 0), (2, 2)]), format!("F(S_B) = {fe:?}"));
    c.expect(f == pts(&[(4, 0), (3, 1), (2, 2)]), format!("Frobenius set = {f:?}"));
    c.expect(fe.len() < f.len() && fe.iter().all(|x| f.contains(x)), "F(S) not a proper subset");
    // (3,0) lies below the gap (4,0) in the cone order
    let three = IntPoint::xy(3, 0);
    let dominated = diag().order_leq(&three, &IntPoint::xy(4, 0)).unwrap();
    c.expect(!f.contains(&three) && dominated, "(3,0) should be dominated by (4,0)");
    c.note("(3,0) is below the gap (4,0), so it is not maximal");
}

fn criterion_3(c: &mut Check) {
    let mut checked = 0;
    for cone in [plane(), diag()] {
        for s in all_upto(&cone, 5).into_iter().filter(|s| s.genus() > 0) {
            checked += 1;
            let f = s.frobenius_set();
            let pf = s.pseudo_frobenius().unwrap();
            let tag = format!("{:?} {:?}", cone, s.gaps());
            c.expect(f.iter().all(|x| pf.contains(x)), format!("F not in PF for {tag}"));
            for b in cone.points_up_to(8).unwrap().into_iter().filter(|b| !b.is_zero() && !s.is_gap(b)) {
                let ap = s.apery_set(&b).unwrap();
                c.expect(f.iter().all(|x| ap.contains(&(*x + b))), format!("F not in Ap - {b} for {tag}"));
            }
            let fe = s.frobenius_elements().unwrap();
            c.expect(fe.iter().all(|x| f.contains(x)), format!("F(S) not in F for {tag}"));
            c.expect(s.minimal_generators() == oracle_minimals(&s, minimals_cap(&s)).unwrap(), format!("msg vs oracle for {tag}"));
            let anti = f.iter().all(|a| f.iter().all(|b| a == b || !cone.order_leq(a, b).unwrap()));
            c.expect(anti, format!("F not an antichain for {tag}"));
        }
    }
    c.note(format!("{checked} semigroups"));
}

fn criterion_4(c: &mut Check) {
    let mut checked = 0;
    for cone in [plane(), diag()] {
        for s in all_upto(&cone, 5) {
            checked += 1;
            let back = expand(&GeneratorInput::new(cone, s.minimal_generators()).unwrap());
            c.expect(back.as_ref() == Ok(&s), format!("round trip failed for {:?}", s.gaps()));
        }
    }
    c.note(format!("{checked} semigroups"));
}

fn criterion_5(c: &mut Check) {
    for cone in [plane(), diag()] {
        let rays = cone.rays();
        let band: i64 = rays.iter().map(IntPoint::weight).sum();
        let widest = rays.iter().map(IntPoint::weight).max().unwrap();
        let counts: Vec<usize> = enumerate_genus(&cone, 3).unwrap().iter().map(|l| l.count()).collect();
        let oracle: Vec<usize> = (0..=3)
            .map(|g| oracle_all_gapsets(&cone, g, (2 * g as i64 + 1) * widest + band).unwrap().len())
            .collect();
        c.expect(counts == oracle, format!("{cone:?}: tree {counts:?} vs oracle {oracle:?}"));
        if cone == plane() {
            c.expect(counts[..3] == [1, 2, 7], format!("plane counts {counts:?}"));
            c.note(format!("plane genus 3 count {}", counts[3]));
        }
    }
    let line: Vec<usize> = enumerate_genus(&Cone::full(1).unwrap(), 5).unwrap().iter().map(|l| l.count()).collect();
    c.expect(line == [1, 1, 2, 4, 7, 12], format!("line counts {line:?}"));
}

fn criterion_6(c: &mut Check) {
    let cfg = SweepConfig { jobs: Some(4), ..SweepConfig::new(6) };
    for cone in [plane(), diag(), skew()] {
        let sum = wilf_sweep(&cone, &cfg).unwrap();
        c.expect(sum.counterexamples.is_empty(), format!("{cone:?}: {} counterexamples", sum.counterexamples.len()));
        c.expect(sum.min_margin() >= 0, format!("{cone:?}: min margin {}", sum.min_margin()));
        c.note(format!("{} semigroups over {}", sum.counts.iter().sum::<usize>(), label(&cone)));
    }
    let sa = s_a();
    let listed = enumerate_genus(&diag(), 2).unwrap()[2].semigroups.contains(&sa);
    c.expect(listed && wilf_report(&sa).margin == 0, "S_A missing or margin not 0");
    for gens in [&[2u64, 3][..], &[3, 5], &[4, 6, 9]] {
        let n = ns(gens);
        let gaps = n.gaps().iter().map(|&g| IntPoint::n(g as i64)).collect();
        let r = wilf_report(&CSemigroup::new(Cone::full(1).unwrap(), gaps).unwrap());
        let cond = n.conductor();
        let below = (0..cond).filter(|&k| n.contains(k)).count() as u64;
        let classical = (n.embedding_dimension() as u64, below, cond);
        c.expect((r.e, r.n, r.c) == classical, format!("{n:?}: {:?} vs {classical:?}", (r.e, r.n, r.c)));
    }
}

fn criterion_7(c: &mut Check) {
    for cone in [plane(), diag()] {
        for m in [1, 2, 5, 10, 100] {
            let target = Rational64::from(m);
            let rho = high_elasticity(cone, target).and_then(|s| s.quasi_elasticity());
            c.expect(matches!(rho, Ok(r) if r > target), format!("{cone:?}, M = {m}: {rho:?}"));
        }
    }
}

fn criterion_8(c: &mut Check) {
    let spec = IdemaxialSpec::new(plane(), ns(&[3, 5])).unwrap();
    let s = idemaxial(&spec).unwrap();
    c.expect(s.genus() == 18, format!("genus {}", s.genus()));
    for i in 0..2 {
        c.expect(s.ray_restriction(i).unwrap() == ns(&[3, 5]), format!("ray {i} restriction"));
    }
    let weight7 = pts(&(0..=7).map(|x| (x, 7 - x)).collect::<Vec<_>>());
    c.expect(s.frobenius_set() == weight7, "F is not the weight-7 line");
    c.expect(s.pseudo_frobenius().unwrap() == weight7, "PF differs from F");
    let excluded = s.weight_set().excluded().to_vec();
    c.expect(excluded == [7], format!("W = N minus {excluded:?}, expected N minus [7]"));
    if excluded != [7] {
        c.note("levels 1, 2, 4 carry no element of S, so by definition they are outside W");
    }
    for cone in [plane(), diag()] {
        for gens in [&[3u64, 5][..], &[2, 3], &[3, 4], &[4, 7, 9]] {
            let spec = IdemaxialSpec::new(cone, ns(gens)).unwrap();
            let (lo, hi) = frobenius_band(&spec).unwrap();
            let f = idemaxial(&spec).unwrap().frobenius_set();
            let inside = f.iter().all(|x| (lo..=hi).contains(&spec.level(x)));
            c.expect(inside, format!("band ({lo}, {hi}) misses F for {gens:?} over {cone:?}"));
        }
    }
    let r = pf_lines_check(&spec).unwrap();
    let four = r.line(4);
    let recorded = four.is_some_and(|l| {
        !l.contained && l.witnesses.iter().any(|w| w.point == IntPoint::xy(4, 0) && w.sum == IntPoint::xy(7, 0))
    });
    c.expect(recorded, "level-4 line not recorded as outside PF(S)");
    c.expect(r.frobenius_line_contained, "Frobenius level line not inside PF(S)");
    c.note(format!("PF(<3,5>) = {:?}; level 4 is a gap level outside it", r.pattern_pf));
}

fn criterion_9(c: &mut Check) {
    for cone in [plane(), diag(), skew()] {
        let mut texts = Vec::new();
        for jobs in [1, 4, 1, 4] {
            let cfg = SweepConfig { jobs: Some(jobs), ..SweepConfig::new(5) };
            texts.push(wilf_sweep(&cone, &cfg).unwrap().to_json().to_string());
        }
        c.expect(texts.iter().all(|t| *t == texts[0]), format!("sweep output differs across schedules for {cone:?}"));
    }
    let sa = serde_json::to_string(&s_a()).unwrap();
    let cmds: [&[&str]; 8] = [
        &["gaps"],
        &["msg"],
        &["frobenius", "--elements"],
        &["pf"],
        &["apery", "--b", "3,3"],
        &["weights"],
        &["wilf", "report"],
        &["plot", "--pf", "--msg", "--levels", "4"],
    ];
    for args in cmds {
        let once = || {
            let mut argv = vec!["conesemi"];
            argv.extend_from_slice(args);
            let mut out = Vec::new();
            let code = run(argv, &mut sa.as_bytes(), &mut out, &mut Vec::new());
            (code, out)
        };
        let (a, b) = (once(), once());
        c.expect(a.0 == 0 && a == b, format!("`{}` not byte-stable", args.join(" ")));
    }
}

type Criterion = (&'static str, fn(&mut Check));

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("example S_A", criterion_1),
        ("example S_B", criterion_2),
        ("invariant suite, genus <= 5", criterion_3),
        ("generator round trip, genus <= 5", criterion_4),
        ("enumeration exactness", criterion_5),
        ("Wilf sweep, genus <= 6", criterion_6),
        ("quasi-elasticity unbounded", criterion_7),
        ("idemaxial suite", criterion_8),
        ("determinism", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut c = Check::default();
        f(&mut c);
        let secs = start.elapsed().as_secs_f64();
        let status = if c.failures.is_empty() { "PASS" } else { "FAIL" };
        let mut line = format!("criterion {} ({name}): {status} [{secs:.1}s]", i + 1);
        if !c.notes.is_empty() {
            line += &format!("; {}", c.notes.join("; "));
        }
        println!("{line}");
        for msg in c.failures.iter().take(5) {
            println!("    failed: {msg}");
        }
        if !c.failures.is_empty() {
            failed += 1;
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
