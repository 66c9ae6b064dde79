//! C ABI over `conesemi`.
//!
//! Semigroups cross the boundary as opaque `CsSemigroup` handles. Every
//! function returns a `CsStatus`; on failure the message is available from
//! `cs_last_error_message` on the same thread. Point lists and strings
//! handed out here must be released with `cs_point_list_free` and
//! `cs_string_free`.
//!
//! Safety contract for every `unsafe` entry point: handles come from this
//! library and are not used after `cs_semigroup_free`; input arrays hold at
//! least the stated number of coordinates; strings are NUL-terminated;
//! output pointers are valid for one write. Null pointers are reported as
//! `CS_STATUS_NULL_POINTER` rather than dereferenced.
#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use conesemi::semigroup::Order;
use conesemi::wilf::{wilf_report_with, wilf_sweep, SweepConfig};
use conesemi::{genexp, CSemigroup, Cone, Error, IntPoint};

/// Result codes. `CS_STATUS_OK` is zero; library errors map one to one onto
/// the remaining codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CsStatus {
    Ok = 0,
    NullPointer,
    InvalidArgument,
    Panic,
    DimensionMismatch,
    UnsupportedDimension,
    InvalidCone,
    CapacityExceeded,
    GapOutsideCone,
    ZeroGap,
    NotClosed,
    EmptyGapSet,
    NotAMember,
    ZeroShift,
    InvalidRay,
    InvalidNumerical,
    GeneratorOutsideCone,
    NoGenerators,
    NotCofinite,
    InfiniteGapFamily,
    ConeMismatch,
    BudgetExceeded,
    PointOutsideCone,
    ZeroPoint,
    DegeneratePattern,
    CapTooSmall,
    Parse,
}

impl From<&Error> for CsStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::DimensionMismatch { .. } => CsStatus::DimensionMismatch,
            Error::UnsupportedDimension(_) => CsStatus::UnsupportedDimension,
            Error::InvalidCone(_) => CsStatus::InvalidCone,
            Error::CapacityExceeded { .. } => CsStatus::CapacityExceeded,
            Error::GapOutsideCone(_) => CsStatus::GapOutsideCone,
            Error::ZeroGap => CsStatus::ZeroGap,
            Error::NotClosed { .. } => CsStatus::NotClosed,
            Error::EmptyGapSet => CsStatus::EmptyGapSet,
            Error::NotAMember(_) => CsStatus::NotAMember,
            Error::ZeroShift => CsStatus::ZeroShift,
            Error::InvalidRay { .. } => CsStatus::InvalidRay,
            Error::InvalidNumerical(_) => CsStatus::InvalidNumerical,
            Error::GeneratorOutsideCone(_) => CsStatus::GeneratorOutsideCone,
            Error::NoGenerators => CsStatus::NoGenerators,
            Error::NotCofinite { .. } => CsStatus::NotCofinite,
            Error::InfiniteGapFamily { .. } => CsStatus::InfiniteGapFamily,
            Error::ConeMismatch(_) => CsStatus::ConeMismatch,
            Error::BudgetExceeded(_) => CsStatus::BudgetExceeded,
            Error::PointOutsideCone(_) => CsStatus::PointOutsideCone,
            Error::ZeroPoint => CsStatus::ZeroPoint,
            Error::DegeneratePattern => CsStatus::DegeneratePattern,
            Error::CapTooSmall { .. } => CsStatus::CapTooSmall,
            Error::Parse(_) => CsStatus::Parse,
        }
    }
}

/// Partial order selector for Frobenius sets and Wilf counts.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CsOrder {
    Cone = 0,
    Induced = 1,
}

impl From<CsOrder> for Order {
    fn from(o: CsOrder) -> Self {
        match o {
            CsOrder::Cone => Order::Cone,
            CsOrder::Induced => Order::Induced,
        }
    }
}

/// Opaque semigroup handle.
pub struct CsSemigroup {
    inner: CSemigroup,
}

/// `len` points of dimension `dim`, coordinates stored row by row.
#[repr(C)]
#[derive(Debug)]
pub struct CsPointList {
    pub coords: *mut i64,
    pub len: usize,
    pub dim: usize,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct CsWilfReport {
    pub e: u64,
    pub n: u64,
    pub c: u64,
    pub p: u64,
    pub margin: i64,
    pub holds: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

enum Fail {
    Status(CsStatus, String),
    Lib(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

fn null(what: &str) -> Fail {
    Fail::Status(CsStatus::NullPointer, format!("{what} is null"))
}

fn invalid(msg: impl Into<String>) -> Fail {
    Fail::Status(CsStatus::InvalidArgument, msg.into())
}

/// Runs `f`, converting errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> CsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            CsStatus::Ok
        }
        Ok(Err(Fail::Status(s, msg))) => {
            set_error(&msg);
            s
        }
        Ok(Err(Fail::Lib(e))) => {
            set_error(&format!("{}: {e}", e.kind()));
            CsStatus::from(&e)
        }
        Err(_) => {
            set_error("internal panic");
            CsStatus::Panic
        }
    }
}

unsafe fn handle<'a>(s: *const CsSemigroup) -> Result<&'a CSemigroup, Fail> {
    s.as_ref().map(|h| &h.inner).ok_or_else(|| null("semigroup"))
}

unsafe fn c_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s).to_str().map_err(|_| invalid(format!("{what} is not UTF-8")))
}

unsafe fn points(coords: *const i64, count: usize, dim: usize) -> Result<Vec<IntPoint>, Fail> {
    if count == 0 {
        return Ok(Vec::new());
    }
    if coords.is_null() {
        return Err(null("coordinate array"));
    }
    let flat = std::slice::from_raw_parts(coords, count * dim);
    Ok(flat.chunks(dim).map(IntPoint::new).collect::<Result<_, _>>()?)
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(v);
    Ok(())
}

unsafe fn put_points(out: *mut CsPointList, pts: Vec<IntPoint>, dim: usize) -> Result<(), Fail> {
    let flat: Vec<i64> = pts.iter().flat_map(|p| p.coords().to_vec()).collect();
    let len = pts.len();
    let coords = Box::into_raw(flat.into_boxed_slice()) as *mut i64;
    put(out, CsPointList { coords, len, dim })
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| invalid("string holds NUL"))?;
    put(out, c.into_raw())
}

unsafe fn put_handle(out: *mut *mut CsSemigroup, s: CSemigroup) -> Result<(), Fail> {
    put(out, Box::into_raw(Box::new(CsSemigroup { inner: s })))
}

/// Semigroup over the full cone N^p (1 <= p <= 3) with `gap_count` gaps
/// given as `gap_count * p` coordinates.
#[no_mangle]
pub unsafe extern "C" fn cs_semigroup_new_full(
    p: usize,
    gaps: *const i64,
    gap_count: usize,
    out: *mut *mut CsSemigroup,
) -> CsStatus {
    guard(|| {
        let cone = Cone::full(p)?;
        let s = CSemigroup::new(cone, points(gaps, gap_count, p)?)?;
        put_handle(out, s)
    })
}

/// Semigroup over the planar cone spanned by `(r1x, r1y)` and `(r2x, r2y)`.
#[no_mangle]
pub unsafe extern "C" fn cs_semigroup_new_rays2d(
    r1x: i64,
    r1y: i64,
    r2x: i64,
    r2y: i64,
    gaps: *const i64,
    gap_count: usize,
    out: *mut *mut CsSemigroup,
) -> CsStatus {
    guard(|| {
        let cone = Cone::rays2d(IntPoint::xy(r1x, r1y), IntPoint::xy(r2x, r2y))?;
        let s = CSemigroup::new(cone, points(gaps, gap_count, 2)?)?;
        put_handle(out, s)
    })
}

/// Parses `{"cone": ..., "gaps": [...]}`.
#[no_mangle]
pub unsafe extern "C" fn cs_semigroup_from_json(json: *const c_char, out: *mut *mut CsSemigroup) -> CsStatus {
    guard(|| {
        let text = c_str(json, "json")?;
        let r: conesemi::semigroup::SemigroupRepr =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        put_handle(out, CSemigroup::new(r.cone, r.gaps)?)
    })
}

/// Expands `{"cone": ..., "generators": [...]}` into its gap set.
#[no_mangle]
pub unsafe extern "C" fn cs_semigroup_from_generators_json(
    json: *const c_char,
    out: *mut *mut CsSemigroup,
) -> CsStatus {
    #[derive(serde::Deserialize)]
    struct Gens {
        cone: Cone,
        generators: Vec<IntPoint>,
    }
    guard(|| {
        let g: Gens = serde_json::from_str(c_str(json, "json")?).map_err(|e| Error::Parse(e.to_string()))?;
        let s = genexp::expand(&genexp::GeneratorInput::new(g.cone, g.generators)?)?;
        put_handle(out, s)
    })
}

/// Releases a handle; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn cs_semigroup_free(s: *mut CsSemigroup) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

#[no_mangle]
pub unsafe extern "C" fn cs_semigroup_genus(s: *const CsSemigroup, out: *mut usize) -> CsStatus {
    guard(|| put(out, handle(s)?.genus()))
}

#[no_mangle]
pub unsafe extern "C" fn cs_semigroup_dim(s: *const CsSemigroup, out: *mut usize) -> CsStatus {
    guard(|| put(out, handle(s)?.dim()))
}

/// Membership of the point with `dim` coordinates at `coords`.
#[no_mangle]
pub unsafe extern "C" fn cs_semigroup_is_member(
    s: *const CsSemigroup,
    coords: *const i64,
    dim: usize,
    out: *mut bool,
) -> CsStatus {
    guard(|| {
        let x = points(coords, 1, dim)?[0];
        put(out, handle(s)?.member(&x)?)
    })
}

#[no_mangle]
pub unsafe extern "C" fn cs_semigroup_gaps(s: *const CsSemigroup, out: *mut CsPointList) -> CsStatus {
    guard(|| {
        let s = handle(s)?;
        put_points(out, s.gaps().to_vec(), s.dim())
    })
}

#[no_mangle]
pub unsafe extern "C" fn cs_semigroup_minimal_generators(s: *const CsSemigroup, out: *mut CsPointList) -> CsStatus {
    guard(|| {
        let s = handle(s)?;
        put_points(out, s.minimal_generators(), s.dim())
    })
}

#[no_mangle]
pub unsafe extern "C" fn cs_semigroup_frobenius_set(
    s: *const CsSemigroup,
    order: CsOrder,
    out: *mut CsPointList,
) -> CsStatus {
    guard(|| {
        let s = handle(s)?;
        put_points(out, s.frobenius_set_with(order.into()), s.dim())
    })
}

#[no_mangle]
pub unsafe extern "C" fn cs_semigroup_pseudo_frobenius(s: *const CsSemigroup, out: *mut CsPointList) -> CsStatus {
    guard(|| {
        let s = handle(s)?;
        put_points(out, s.pseudo_frobenius()?, s.dim())
    })
}

#[no_mangle]
pub unsafe extern "C" fn cs_semigroup_frobenius_elements(s: *const CsSemigroup, out: *mut CsPointList) -> CsStatus {
    guard(|| {
        let s = handle(s)?;
        put_points(out, s.frobenius_elements()?, s.dim())
    })
}

/// Apéry set with respect to the element `b` (`dim` coordinates).
#[no_mangle]
pub unsafe extern "C" fn cs_semigroup_apery(
    s: *const CsSemigroup,
    b: *const i64,
    dim: usize,
    out: *mut CsPointList,
) -> CsStatus {
    guard(|| {
        let s = handle(s)?;
        let b = points(b, 1, dim)?[0];
        put_points(out, s.apery_set(&b)?, s.dim())
    })
}

/// Quasi-elasticity as a reduced fraction.
#[no_mangle]
pub unsafe extern "C" fn cs_semigroup_quasi_elasticity(
    s: *const CsSemigroup,
    numer: *mut i64,
    denom: *mut i64,
) -> CsStatus {
    guard(|| {
        let r = handle(s)?.quasi_elasticity()?;
        put(numer, *r.numer())?;
        put(denom, *r.denom())
    })
}

/// Excluded weights of the weight set, written to `out` as a list of
/// one-dimensional points.
#[no_mangle]
pub unsafe extern "C" fn cs_semigroup_weight_set_excluded(s: *const CsSemigroup, out: *mut CsPointList) -> CsStatus {
    guard(|| {
        let w = handle(s)?.weight_set();
        let pts = w.excluded().iter().map(|&t| IntPoint::n(t as i64)).collect();
        put_points(out, pts, 1)
    })
}

#[no_mangle]
pub unsafe extern "C" fn cs_semigroup_wilf_report(
    s: *const CsSemigroup,
    order: CsOrder,
    out: *mut CsWilfReport,
) -> CsStatus {
    guard(|| {
        let r = wilf_report_with(handle(s)?, order.into());
        put(out, CsWilfReport { e: r.e, n: r.n, c: r.c, p: r.p, margin: r.margin, holds: r.holds })
    })
}

/// Semigroup JSON; free the string with `cs_string_free`.
#[no_mangle]
pub unsafe extern "C" fn cs_semigroup_to_json(s: *const CsSemigroup, out: *mut *mut c_char) -> CsStatus {
    guard(|| {
        let text = serde_json::to_string(handle(s)?).map_err(|e| invalid(e.to_string()))?;
        put_string(out, text)
    })
}

/// Runs the Wilf sweep over the cone given as JSON and returns the report
/// JSON. `jobs == 0` uses the default thread count.
#[no_mangle]
pub unsafe extern "C" fn cs_wilf_sweep_json(
    cone_json: *const c_char,
    max_genus: usize,
    jobs: usize,
    order: CsOrder,
    out: *mut *mut c_char,
) -> CsStatus {
    guard(|| {
        let cone: Cone = serde_json::from_str(c_str(cone_json, "cone json")?).map_err(|e| Error::Parse(e.to_string()))?;
        let cfg = SweepConfig { max_genus, order: order.into(), jobs: (jobs > 0).then_some(jobs) };
        let summary = wilf_sweep(&cone, &cfg)?;
        put_string(out, summary.to_json().to_string())
    })
}

#[no_mangle]
pub unsafe extern "C" fn cs_point_list_free(list: *mut CsPointList) {
    if let Some(l) = list.as_mut() {
        if !l.coords.is_null() {
            let n = l.len * l.dim;
            drop(Box::from_raw(ptr::slice_from_raw_parts_mut(l.coords, n)));
        }
        *l = CsPointList { coords: ptr::null_mut(), len: 0, dim: 0 };
    }
}

#[no_mangle]
pub unsafe extern "C" fn cs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failing call on this thread (empty after a
/// success). The pointer stays valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn cs_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Static name of a status code.
#[no_mangle]
pub extern "C" fn cs_status_name(status: CsStatus) -> *const c_char {
    let name: &'static CStr = match status {
        CsStatus::Ok => c"Ok",
        CsStatus::NullPointer => c"NullPointer",
        CsStatus::InvalidArgument => c"InvalidArgument",
        CsStatus::Panic => c"Panic",
        CsStatus::DimensionMismatch => c"DimensionMismatch",
        CsStatus::UnsupportedDimension => c"UnsupportedDimension",
        CsStatus::InvalidCone => c"InvalidCone",
        CsStatus::CapacityExceeded => c"CapacityExceeded",
        CsStatus::GapOutsideCone => c"GapOutsideCone",
        CsStatus::ZeroGap => c"ZeroGap",
        CsStatus::NotClosed => c"NotClosed",
        CsStatus::EmptyGapSet => c"EmptyGapSet",
        CsStatus::NotAMember => c"NotAMember",
        CsStatus::ZeroShift => c"ZeroShift",
        CsStatus::InvalidRay => c"InvalidRay",
        CsStatus::InvalidNumerical => c"InvalidNumerical",
        CsStatus::GeneratorOutsideCone => c"GeneratorOutsideCone",
        CsStatus::NoGenerators => c"NoGenerators",
        CsStatus::NotCofinite => c"NotCofinite",
        CsStatus::InfiniteGapFamily => c"InfiniteGapFamily",
        CsStatus::ConeMismatch => c"ConeMismatch",
        CsStatus::BudgetExceeded => c"BudgetExceeded",
        CsStatus::PointOutsideCone => c"PointOutsideCone",
        CsStatus::ZeroPoint => c"ZeroPoint",
        CsStatus::DegeneratePattern => c"DegeneratePattern",
        CsStatus::CapTooSmall => c"CapTooSmall",
        CsStatus::Parse => c"Parse",
    };
    name.as_ptr()
}
