//! Command-line front end. Inputs are JSON read from a file or stdin;
//! results are JSON on stdout with sorted keys and canonically ordered
//! point lists, so output is byte-stable.
//!
//! Exit status: 0 on success, 1 on a domain error (the error kind and any
//! witness go to stderr), 2 on a usage error.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_rational::Rational64;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::construct::{self, IdemaxialSpec};
use crate::error::{Error, Result};
use crate::genexp::{self, GeneratorInput};
use crate::geom::{Cone, IntPoint};
use crate::numerical::NumericalSemigroup;
use crate::oracle;
use crate::plot::{self, RenderSpec};
use crate::semigroup::{CSemigroup, Order, SemigroupRepr};
use crate::wilf::{self, SweepConfig};

#[derive(Parser, Debug)]
#[command(
    name = "conesemi",
    version,
    about = "Invariants of C-semigroups (affine semigroups with finite complement in a cone)",
    after_help = "Semigroup JSON: {\"cone\":{\"type\":\"rays2d\",\"rays\":[[1,0],[1,1]]},\"gaps\":[[1,1],[2,2]]}\n\
                  Cone JSON: {\"type\":\"full\",\"p\":2}, optionally wrapped as {\"cone\":...}\n\
                  Environment: CONESEMI_CAPACITY overrides the point-count cap of enumerations."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Input {
    /// Input JSON file; stdin when omitted or "-"
    input: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Gap set of a semigroup given by {"cone":..., "generators":[...]} (or echo a semigroup)
    Gaps(Input),
    /// Minimal generating set
    Msg(Input),
    /// Frobenius set (maximal gaps)
    Frobenius {
        #[command(flatten)]
        input: Input,
        /// Partial order for maximality
        #[arg(long, default_value = "cone")]
        order: Order,
        /// Also list the Frobenius elements (gaps maximal under some term order)
        #[arg(long)]
        elements: bool,
    },
    /// Pseudo-Frobenius set
    Pf(Input),
    /// Apéry set with respect to an element b
    Apery {
        #[command(flatten)]
        input: Input,
        /// Element of S, as comma-separated coordinates
        #[arg(long, value_parser = parse_point)]
        b: IntPoint,
    },
    /// Excluded weights of the weight set
    Weights(Input),
    /// Quasi-elasticity max w(F) / min w(F)
    Elasticity(Input),
    /// Numerical semigroup carried by an extremal ray
    Restrict {
        #[command(flatten)]
        input: Input,
        /// Ray index (0-based, counterclockwise)
        #[arg(long)]
        ray: usize,
    },
    /// Build semigroups with prescribed structure
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Extended Wilf inequality e*n >= p*c
    #[command(subcommand)]
    Wilf(WilfCmd),
    /// All semigroups over a cone up to a genus
    Enumerate {
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// SVG picture of a planar semigroup
    Plot {
        #[command(flatten)]
        input: Input,
        /// Output file; stdout when omitted
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Lattice units drawn beyond the largest gap weight
        #[arg(long, default_value_t = 3)]
        margin: i64,
        /// Weights whose level lines are drawn, comma-separated
        #[arg(long, value_delimiter = ',')]
        levels: Vec<i64>,
        /// Circle the pseudo-Frobenius set
        #[arg(long)]
        pf: bool,
        /// Circle the minimal generators
        #[arg(long)]
        msg: bool,
    },
    /// Brute-force reference computations
    #[command(subcommand)]
    Oracle(OracleCmd),
    /// Check a semigroup JSON for validity
    Validate(Input),
}

#[derive(Args, Debug)]
struct ConeArg {
    /// Cone JSON file
    #[arg(long)]
    cone: PathBuf,
}

#[derive(Args, Debug)]
struct PatternArgs {
    #[command(flatten)]
    cone: ConeArg,
    /// Gaps of the pattern numerical semigroup, comma-separated
    #[arg(long, value_delimiter = ',', conflicts_with = "pattern_generators")]
    pattern_gaps: Option<Vec<u64>>,
    /// Generators of the pattern numerical semigroup, comma-separated
    #[arg(long, value_delimiter = ',')]
    pattern_generators: Option<Vec<u64>>,
}

#[derive(Subcommand, Debug)]
enum ConstructCmd {
    /// Idemaxial semigroup whose rays all carry the pattern
    Idemaxial(PatternArgs),
    /// Level band containing the Frobenius set of the idemaxial semigroup
    Band(PatternArgs),
    /// Which gap level lines of the pattern land in PF(S)
    PfLines(PatternArgs),
    /// Semigroup with quasi-elasticity above a target
    Elasticity {
        #[command(flatten)]
        cone: ConeArg,
        /// Target ratio, integer or p/q
        #[arg(long, value_parser = parse_ratio)]
        target: Rational64,
    },
    /// Remove the lower sets of the given points
    LowerSet {
        #[command(flatten)]
        cone: ConeArg,
        /// Points as x,y;x,y;...
        #[arg(long, value_delimiter = ';', value_parser = parse_point)]
        points: Vec<IntPoint>,
    },
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[command(flatten)]
    cone: ConeArg,
    #[arg(long)]
    max_genus: usize,
    /// Worker threads
    #[arg(long)]
    jobs: Option<usize>,
    /// Output file; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum WilfCmd {
    /// Check every semigroup up to a genus
    Sweep {
        #[command(flatten)]
        sweep: SweepArgs,
        /// Order used in the lower sets of c and n
        #[arg(long, default_value = "cone")]
        order: Order,
    },
    /// e, n, c and the margin for one semigroup
    Report {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "cone")]
        order: Order,
    },
}

#[derive(Subcommand, Debug)]
enum OracleCmd {
    /// Membership in the monoid spanned by {"cone":..., "generators":[...]}
    Member {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_parser = parse_point)]
        x: IntPoint,
        #[arg(long)]
        cap: i64,
    },
    /// Minimal generators by pairwise comparison
    Minimals {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        cap: i64,
    },
    /// Every closed gap set of a genus
    Gapsets {
        #[command(flatten)]
        cone: ConeArg,
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        cap: i64,
    },
}

fn parse_point(s: &str) -> std::result::Result<IntPoint, String> {
    let t = s.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']);
    let coords: Vec<i64> = t
        .split(',')
        .map(|c| c.trim().parse::<i64>().map_err(|e| format!("bad coordinate '{c}': {e}")))
        .collect::<std::result::Result<_, _>>()?;
    IntPoint::new(&coords).map_err(|e| e.to_string())
}

fn parse_ratio(s: &str) -> std::result::Result<Rational64, String> {
    let bad = |e: std::num::ParseIntError| format!("bad ratio '{s}': {e}");
    match s.split_once('/') {
        Some((n, d)) => {
            let d: i64 = d.trim().parse().map_err(bad)?;
            if d == 0 {
                return Err("zero denominator".into());
            }
            Ok(Rational64::new(n.trim().parse().map_err(bad)?, d))
        }
        None => Ok(Rational64::from(s.trim().parse::<i64>().map_err(bad)?)),
    }
}

/// A failure after argument parsing: a library error or an I/O problem.
enum Failure {
    Domain(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Out<T> = std::result::Result<T, Failure>;

struct Ctx<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn read(&mut self, input: &Input) -> Out<String> {
        match input.input.as_deref() {
            Some(p) if p != Path::new("-") => read_file(p),
            _ => {
                let mut s = String::new();
                self.stdin.read_to_string(&mut s).map_err(|e| Failure::Io(format!("stdin: {e}")))?;
                Ok(s)
            }
        }
    }

    fn emit(&mut self, v: &Value) -> Out<()> {
        writeln!(self.stdout, "{v}").map_err(|e| Failure::Io(e.to_string()))
    }

    fn emit_to(&mut self, out: Option<&Path>, text: &str) -> Out<()> {
        match out {
            Some(p) => std::fs::write(p, text).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
            None => self.stdout.write_all(text.as_bytes()).map_err(|e| Failure::Io(e.to_string())),
        }
    }

    fn semigroup(&mut self, input: &Input) -> Out<CSemigroup> {
        parse_semigroup(&self.read(input)?)
    }
}

fn read_file(p: &Path) -> Out<String> {
    std::fs::read_to_string(p).map_err(|e| Failure::Io(format!("{}: {e}", p.display())))
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// Validates through `CSemigroup::new` so the structured error survives.
fn parse_semigroup(text: &str) -> Out<CSemigroup> {
    let r: SemigroupRepr = parse_json(text)?;
    Ok(CSemigroup::new(r.cone, r.gaps)?)
}

/// A cone, bare or wrapped as `{"cone": ...}`.
fn parse_cone(text: &str) -> Result<Cone> {
    let v: Value = parse_json(text)?;
    let inner = v.get("cone").cloned().unwrap_or(v);
    serde_json::from_value(inner).map_err(|e| Error::Parse(e.to_string()))
}

fn load_cone(arg: &ConeArg) -> Out<Cone> {
    Ok(parse_cone(&read_file(&arg.cone)?)?)
}

#[derive(Deserialize)]
struct GeneratorsJson {
    cone: Cone,
    generators: Vec<IntPoint>,
}

fn pattern_spec(args: &PatternArgs) -> Out<IdemaxialSpec> {
    let cone = load_cone(&args.cone)?;
    let pattern = match (&args.pattern_gaps, &args.pattern_generators) {
        (Some(g), _) => NumericalSemigroup::from_gaps(g.clone())?,
        (None, Some(g)) => NumericalSemigroup::from_generators(g)?,
        (None, None) => return Err(Error::Parse("give --pattern-gaps or --pattern-generators".into()).into()),
    };
    Ok(IdemaxialSpec::new(cone, pattern)?)
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("plain data serializes")
}

fn ratio_str(r: Rational64) -> String {
    r.to_string()
}

/// Witness data for errors that carry points.
fn witness(e: &Error) -> Option<Value> {
    Some(match e {
        Error::NotClosed { left, right, .. } => json!([left, right]),
        Error::GapOutsideCone(p)
        | Error::NotAMember(p)
        | Error::GeneratorOutsideCone(p)
        | Error::ConeMismatch(p)
        | Error::PointOutsideCone(p) => json!(p),
        Error::NotCofinite { ray, gcd } => json!({"ray": ray, "gcd": gcd}),
        Error::InfiniteGapFamily { start, step } => json!({"start": start, "step": step}),
        Error::DimensionMismatch { expected, found } => json!({"expected": expected, "found": found}),
        Error::InvalidRay { index, count } => json!({"index": index, "count": count}),
        Error::CapacityExceeded { limit } => json!({"limit": limit}),
        Error::CapTooSmall { cap, .. } => json!({"cap": cap}),
        _ => return None,
    })
}

fn execute(cmd: Command, ctx: &mut Ctx) -> Out<()> {
    match cmd {
        Command::Gaps(input) => {
            let text = ctx.read(&input)?;
            let v: Value = parse_json(&text)?;
            let s = if v.get("generators").is_some() {
                let g: GeneratorsJson = parse_json(&text)?;
                genexp::expand(&GeneratorInput::new(g.cone, g.generators)?)?
            } else {
                parse_semigroup(&text)?
            };
            ctx.emit(&to_value(&s))
        }
        Command::Msg(input) => {
            let s = ctx.semigroup(&input)?;
            ctx.emit(&json!({"minimal_generators": s.minimal_generators()}))
        }
        Command::Frobenius { input, order, elements } => {
            let s = ctx.semigroup(&input)?;
            let mut v = json!({"frobenius_set": s.frobenius_set_with(order)});
            if elements {
                let fe = if s.genus() == 0 { Vec::new() } else { s.frobenius_elements()? };
                v["frobenius_elements"] = json!(fe);
            }
            ctx.emit(&v)
        }
        Command::Pf(input) => {
            let s = ctx.semigroup(&input)?;
            ctx.emit(&json!({"pseudo_frobenius": s.pseudo_frobenius()?}))
        }
        Command::Apery { input, b } => {
            let s = ctx.semigroup(&input)?;
            ctx.emit(&json!({"apery": s.apery_set(&b)?, "b": b}))
        }
        Command::Weights(input) => {
            let s = ctx.semigroup(&input)?;
            ctx.emit(&json!({"excluded": s.weight_set().excluded()}))
        }
        Command::Elasticity(input) => {
            let s = ctx.semigroup(&input)?;
            ctx.emit(&json!({"quasi_elasticity": ratio_str(s.quasi_elasticity()?)}))
        }
        Command::Restrict { input, ray } => {
            let s = ctx.semigroup(&input)?;
            let n = s.ray_restriction(ray)?;
            let r = s.cone().rays()[ray];
            ctx.emit(&json!({"ray": r, "gaps": n.gaps(), "generators": n.minimal_generators()}))
        }
        Command::Construct(c) => construct_cmd(c, ctx),
        Command::Wilf(WilfCmd::Sweep { sweep, order }) => {
            let cone = load_cone(&sweep.cone)?;
            let cfg = SweepConfig { max_genus: sweep.max_genus, order, jobs: sweep.jobs };
            let summary = wilf::wilf_sweep(&cone, &cfg)?;
            ctx.emit_to(sweep.out.as_deref(), &format!("{}\n", summary.to_json()))
        }
        Command::Wilf(WilfCmd::Report { input, order }) => {
            let s = ctx.semigroup(&input)?;
            ctx.emit(&to_value(&wilf::wilf_report_with(&s, order)))
        }
        Command::Enumerate { sweep } => {
            let cone = load_cone(&sweep.cone)?;
            let run = || wilf::enumerate_genus(&cone, sweep.max_genus);
            let levels = match sweep.jobs {
                Some(j) => rayon::ThreadPoolBuilder::new()
                    .num_threads(j.max(1))
                    .build()
                    .map_err(|e| Failure::Io(format!("thread pool: {e}")))?
                    .install(run)?,
                None => run()?,
            };
            let v = json!({
                "cone": cone,
                "counts": levels.iter().map(|l| l.count()).collect::<Vec<_>>(),
                "levels": levels.iter().map(|l| json!({
                    "genus": l.genus,
                    "gap_sets": l.semigroups.iter().map(|s| s.gaps()).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
            });
            ctx.emit_to(sweep.out.as_deref(), &format!("{v}\n"))
        }
        Command::Plot { input, svg, margin, levels, pf, msg } => {
            let s = ctx.semigroup(&input)?;
            let spec = RenderSpec { margin, levels, pseudo_frobenius: pf, generators: msg, ..RenderSpec::default() };
            ctx.emit_to(svg.as_deref(), &plot::plot(&s, &spec)?)
        }
        Command::Oracle(o) => oracle_cmd(o, ctx),
        Command::Validate(input) => {
            let s = ctx.semigroup(&input)?;
            ctx.emit(&json!({"valid": true, "genus": s.genus()}))
        }
    }
}

fn construct_cmd(cmd: ConstructCmd, ctx: &mut Ctx) -> Out<()> {
    match cmd {
        ConstructCmd::Idemaxial(args) => {
            let s = construct::idemaxial(&pattern_spec(&args)?)?;
            ctx.emit(&to_value(&s))
        }
        ConstructCmd::Band(args) => {
            let (lo, hi) = construct::frobenius_band(&pattern_spec(&args)?)?;
            ctx.emit(&json!({"lower": ratio_str(lo), "upper": ratio_str(hi)}))
        }
        ConstructCmd::PfLines(args) => {
            let r = construct::pf_lines_check(&pattern_spec(&args)?)?;
            ctx.emit(&to_value(&r))
        }
        ConstructCmd::Elasticity { cone, target } => {
            let s = construct::high_elasticity(load_cone(&cone)?, target)?;
            let rho = s.quasi_elasticity()?;
            let mut v = to_value(&s);
            v["quasi_elasticity"] = json!(ratio_str(rho));
            ctx.emit(&v)
        }
        ConstructCmd::LowerSet { cone, points } => {
            let s = construct::lower_set_semigroup(load_cone(&cone)?, &points)?;
            ctx.emit(&to_value(&s))
        }
    }
}

fn oracle_cmd(cmd: OracleCmd, ctx: &mut Ctx) -> Out<()> {
    match cmd {
        OracleCmd::Member { input, x, cap } => {
            let g: GeneratorsJson = parse_json(&ctx.read(&input)?)?;
            ctx.emit(&json!({"member": oracle::oracle_member(&g.generators, &x, cap)?}))
        }
        OracleCmd::Minimals { input, cap } => {
            let s = ctx.semigroup(&input)?;
            ctx.emit(&json!({"minimals": oracle::oracle_minimals(&s, cap)?}))
        }
        OracleCmd::Gapsets { cone, genus, cap } => {
            let sets = oracle::oracle_all_gapsets(&load_cone(&cone)?, genus, cap)?;
            ctx.emit(&json!({"count": sets.len(), "gap_sets": sets}))
        }
    }
}

/// Runs the CLI on `args` (program name first) and returns the exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let mut ctx = Ctx { stdin, stdout };
    match execute(cli.command, &mut ctx) {
        Ok(()) => 0,
        Err(Failure::Domain(e)) => {
            let _ = writeln!(stderr, "error: {}: {e}", e.kind());
            if let Some(w) = witness(&e) {
                let _ = writeln!(stderr, "witness: {w}");
            }
            1
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(stderr, "error: Io: {msg}");
            1
        }
    }
}
