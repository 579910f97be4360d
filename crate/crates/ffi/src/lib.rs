//! C interface to `ehrgraph`.
//!
//! Objects are opaque handles created by `ehr_*_new`/`parse`/`generate`/`analyze`
//! and released with the matching `*_free`. Every fallible call returns an
//! [`EhrStatus`]; on failure `ehr_last_error` describes the cause for the
//! calling thread. Strings returned through out-parameters are owned by the
//! caller and released with [`ehr_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ehrgraph::{
    analyze, build_polytope, count_dilation, generate_family, parse_hypergraph, AnalysisOptions,
    EhrhartAnalysis, Error, Family, Hypergraph, Poly, TuVerdict, Verdict,
};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EhrStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidHypergraph = 4,
    Uncovered = 5,
    WorkCap = 6,
    FitFailed = 7,
    InvalidArgument = 8,
    OutOfRange = 9,
    Internal = 10,
    Panic = 11,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EhrTu {
    True = 0,
    False = 1,
    Indeterminate = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EhrVerdict {
    Pass = 0,
    Fail = 1,
    NotApplicable = 2,
}

/// Which polynomial of the lowest-terms series to read.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EhrPoly {
    Numerator = 0,
    Denominator = 1,
}

/// Options for [`ehr_analyze`]; start from [`ehr_options_default`].
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct EhrOptions {
    pub margin: usize,
    /// Largest dilation counted; ignored unless `has_n_max`.
    pub n_max: u64,
    pub has_n_max: bool,
    pub graph_box: bool,
    pub tu_cap: u64,
    pub vertex_cap: u64,
}

pub struct EhrHypergraph(Hypergraph);

pub struct EhrAnalysis(EhrhartAnalysis);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(s).ok());
}

fn status_of(e: &Error) -> EhrStatus {
    match e {
        Error::Parse { .. } | Error::Json(_) => EhrStatus::Parse,
        Error::InvalidHypergraph(_) | Error::RepeatedEdges => EhrStatus::InvalidHypergraph,
        Error::Uncovered(_) | Error::Unbounded(_) => EhrStatus::Uncovered,
        Error::WorkCap { .. } => EhrStatus::WorkCap,
        Error::TooFewCounts { .. } | Error::DenominatorRejected { .. } | Error::PoleOrder { .. } => {
            EhrStatus::FitFailed
        }
        Error::Argument(_) | Error::UnsupportedRow(_) => EhrStatus::InvalidArgument,
        Error::Internal(_) => EhrStatus::Internal,
    }
}

struct Fail(EhrStatus);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        set_error(e.to_string());
        Fail(status_of(&e))
    }
}

fn fail(status: EhrStatus, msg: &str) -> Fail {
    set_error(msg);
    Fail(status)
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> EhrStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => EhrStatus::Ok,
        Ok(Err(Fail(s))) => s,
        Err(_) => {
            set_error("panic inside ehrgraph");
            EhrStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(fail(EhrStatus::NullPointer, &format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(EhrStatus::InvalidUtf8, &format!("{what} is not UTF-8")))
}

unsafe fn ref_arg<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| fail(EhrStatus::NullPointer, &format!("{what} is null")))
}

unsafe fn write_out<T>(out: *mut T, v: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(fail(EhrStatus::NullPointer, "output pointer is null"));
    }
    out.write(v);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| fail(EhrStatus::Internal, "string contains NUL"))?;
    write_out(out, c.into_raw())
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn ehr_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ehr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parse the text or JSON hypergraph format.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ehr_hypergraph_parse(
    text: *const c_char,
    out: *mut *mut EhrHypergraph,
) -> EhrStatus {
    guard(|| {
        let h = parse_hypergraph(str_arg(text, "text")?)?;
        write_out(out, Box::into_raw(Box::new(EhrHypergraph(h))))
    })
}

/// Build from a flat list of 1-based vertex ids; edge `i` takes the next
/// `edge_sizes[i]` entries of `vertices`.
///
/// # Safety
/// `edge_sizes` must hold `num_edges` values and `vertices` their sum.
#[no_mangle]
pub unsafe extern "C" fn ehr_hypergraph_new(
    num_vertices: usize,
    vertices: *const usize,
    edge_sizes: *const usize,
    num_edges: usize,
    out: *mut *mut EhrHypergraph,
) -> EhrStatus {
    guard(|| {
        if num_edges > 0 && (vertices.is_null() || edge_sizes.is_null()) {
            return Err(fail(EhrStatus::NullPointer, "edge arrays are null"));
        }
        let sizes = if num_edges == 0 { &[][..] } else { std::slice::from_raw_parts(edge_sizes, num_edges) };
        let total = sizes
            .iter()
            .try_fold(0usize, |acc, &s| acc.checked_add(s))
            .ok_or_else(|| fail(EhrStatus::InvalidArgument, "edge sizes overflow"))?;
        let flat = if total == 0 { &[][..] } else { std::slice::from_raw_parts(vertices, total) };
        let mut edges = Vec::with_capacity(num_edges);
        let mut at = 0;
        for &s in sizes {
            edges.push(flat[at..at + s].to_vec());
            at += s;
        }
        let h = Hypergraph::new(num_vertices, edges)?;
        write_out(out, Box::into_raw(Box::new(EhrHypergraph(h))))
    })
}

/// `family` is one of path, cycle, complete, complete-bipartite, hypercube.
///
/// # Safety
/// `family` must be a NUL-terminated string and `params` hold `num_params` values.
#[no_mangle]
pub unsafe extern "C" fn ehr_hypergraph_generate(
    family: *const c_char,
    params: *const i64,
    num_params: usize,
    out: *mut *mut EhrHypergraph,
) -> EhrStatus {
    guard(|| {
        let family: Family = str_arg(family, "family")?.parse()?;
        let params = if num_params == 0 {
            &[][..]
        } else if params.is_null() {
            return Err(fail(EhrStatus::NullPointer, "params is null"));
        } else {
            std::slice::from_raw_parts(params, num_params)
        };
        let h = generate_family(family, params)?;
        write_out(out, Box::into_raw(Box::new(EhrHypergraph(h))))
    })
}

/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ehr_hypergraph_free(h: *mut EhrHypergraph) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `h` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ehr_hypergraph_num_vertices(h: *const EhrHypergraph, out: *mut usize) -> EhrStatus {
    guard(|| write_out(out, ref_arg(h, "hypergraph")?.0.num_vertices()))
}

/// # Safety
/// `h` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ehr_hypergraph_num_edges(h: *const EhrHypergraph, out: *mut usize) -> EhrStatus {
    guard(|| write_out(out, ref_arg(h, "hypergraph")?.0.num_edges()))
}

/// The hypergraph in the text format.
///
/// # Safety
/// `h` must be a live handle; free the result with [`ehr_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ehr_hypergraph_to_text(h: *const EhrHypergraph, out: *mut *mut c_char) -> EhrStatus {
    guard(|| write_string(out, ref_arg(h, "hypergraph")?.0.to_text()))
}

/// Lattice points in the `n`-th dilation, as a decimal string.
///
/// # Safety
/// `h` must be a live handle; free the result with [`ehr_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ehr_count_dilation(
    h: *const EhrHypergraph,
    n: u64,
    graph_box: bool,
    out: *mut *mut c_char,
) -> EhrStatus {
    guard(|| {
        let p = build_polytope(&ref_arg(h, "hypergraph")?.0, graph_box)?;
        write_string(out, count_dilation(&p, n)?.to_string())
    })
}

#[no_mangle]
pub extern "C" fn ehr_options_default() -> EhrOptions {
    let d = AnalysisOptions::default();
    EhrOptions {
        margin: d.margin,
        n_max: 0,
        has_n_max: false,
        graph_box: d.graph_box,
        tu_cap: d.tu_cap,
        vertex_cap: d.vertex_cap,
    }
}

/// Run the full analysis. `options` may be null for the defaults.
///
/// # Safety
/// `h` must be a live handle and `options` null or valid.
#[no_mangle]
pub unsafe extern "C" fn ehr_analyze(
    h: *const EhrHypergraph,
    options: *const EhrOptions,
    out: *mut *mut EhrAnalysis,
) -> EhrStatus {
    guard(|| {
        let h = &ref_arg(h, "hypergraph")?.0;
        let o = options.as_ref().copied().unwrap_or_else(|| ehr_options_default());
        let opts = AnalysisOptions {
            margin: o.margin,
            n_max: o.has_n_max.then_some(o.n_max),
            graph_box: o.graph_box,
            tu_cap: o.tu_cap,
            vertex_cap: o.vertex_cap,
        };
        let a = analyze(h, &opts)?;
        write_out(out, Box::into_raw(Box::new(EhrAnalysis(a))))
    })
}

/// # Safety
/// `a` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ehr_analysis_free(a: *mut EhrAnalysis) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// The series as text, e.g. `(1+x)/(1-x)^4`.
///
/// # Safety
/// `a` must be a live handle; free the result with [`ehr_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ehr_analysis_series(a: *const EhrAnalysis, out: *mut *mut c_char) -> EhrStatus {
    guard(|| write_string(out, ehrgraph::series::format_series(&ref_arg(a, "analysis")?.0.series)))
}

/// The full report as JSON.
///
/// # Safety
/// `a` must be a live handle; free the result with [`ehr_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ehr_analysis_json(a: *const EhrAnalysis, out: *mut *mut c_char) -> EhrStatus {
    guard(|| write_string(out, ehrgraph::report::analysis_json(&ref_arg(a, "analysis")?.0).to_string()))
}

fn poly_of(a: &EhrhartAnalysis, which: EhrPoly) -> &Poly {
    match which {
        EhrPoly::Numerator => a.series.num(),
        EhrPoly::Denominator => a.series.den(),
    }
}

/// Number of coefficients (degree + 1).
///
/// # Safety
/// `a` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ehr_analysis_coeff_count(
    a: *const EhrAnalysis,
    which: EhrPoly,
    out: *mut usize,
) -> EhrStatus {
    guard(|| write_out(out, poly_of(&ref_arg(a, "analysis")?.0, which).coeffs().len()))
}

/// Coefficient of `x^i` as an exact decimal or `p/q` string.
///
/// # Safety
/// `a` must be a live handle; free the result with [`ehr_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ehr_analysis_coeff(
    a: *const EhrAnalysis,
    which: EhrPoly,
    i: usize,
    out: *mut *mut c_char,
) -> EhrStatus {
    guard(|| {
        let p = poly_of(&ref_arg(a, "analysis")?.0, which);
        if i >= p.coeffs().len() {
            return Err(fail(EhrStatus::OutOfRange, "coefficient index out of range"));
        }
        write_string(out, p.coeff(i).to_string())
    })
}

/// Normalized volume as `p/q` (or an integer).
///
/// # Safety
/// `a` must be a live handle; free the result with [`ehr_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ehr_analysis_volume(a: *const EhrAnalysis, out: *mut *mut c_char) -> EhrStatus {
    guard(|| write_string(out, ref_arg(a, "analysis")?.0.normalized_volume.to_string()))
}

/// # Safety
/// `a` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ehr_analysis_tu(a: *const EhrAnalysis, out: *mut EhrTu) -> EhrStatus {
    guard(|| {
        let tu = match ref_arg(a, "analysis")?.0.tu {
            TuVerdict::Unimodular => EhrTu::True,
            TuVerdict::NotUnimodular(_) => EhrTu::False,
            TuVerdict::Indeterminate { .. } => EhrTu::Indeterminate,
        };
        write_out(out, tu)
    })
}

/// # Safety
/// `a` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ehr_analysis_integral(a: *const EhrAnalysis, out: *mut bool) -> EhrStatus {
    guard(|| write_out(out, ref_arg(a, "analysis")?.0.integral))
}

/// True when no applicable check failed.
///
/// # Safety
/// `a` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ehr_analysis_all_pass(a: *const EhrAnalysis, out: *mut bool) -> EhrStatus {
    guard(|| write_out(out, ref_arg(a, "analysis")?.0.all_pass()))
}

/// # Safety
/// `a` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ehr_analysis_verdict_count(a: *const EhrAnalysis, out: *mut usize) -> EhrStatus {
    guard(|| write_out(out, ref_arg(a, "analysis")?.0.verdicts.len()))
}

/// Name and outcome of check `i`. `name` may be null if only the status is wanted.
///
/// # Safety
/// `a` must be a live handle; free `*name` with [`ehr_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ehr_analysis_verdict(
    a: *const EhrAnalysis,
    i: usize,
    name: *mut *mut c_char,
    status: *mut EhrVerdict,
) -> EhrStatus {
    guard(|| {
        let (n, v) = ref_arg(a, "analysis")?
            .0
            .verdicts
            .get(i)
            .ok_or_else(|| fail(EhrStatus::OutOfRange, "verdict index out of range"))?;
        let s = match v {
            Verdict::Pass(_) => EhrVerdict::Pass,
            Verdict::Fail(_) => EhrVerdict::Fail,
            Verdict::NotApplicable(_) => EhrVerdict::NotApplicable,
        };
        write_out(status, s)?;
        if !name.is_null() {
            write_string(name, n.clone())?;
        }
        Ok(())
    })
}
