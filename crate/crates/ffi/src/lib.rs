//! C ABI for `spgraph`.
//!
//! Every function returns an [`SpgStatus`]; on anything but `SPG_STATUS_OK`
//! a message is available from [`spg_last_error`] until the next call on the
//! same thread. Handles are opaque and owned by the caller, who releases
//! them with the matching `*_free`. Strings returned through `out`
//! parameters are released with [`spg_string_free`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use spgraph::grid::{self, GridSpec, MoveSequence};
use spgraph::spg::build_spg;
use spgraph::verify::{self, Limits};
use spgraph::{BaseInstance, Error, Graph, SpGraph};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidGraph = 4,
    InvalidArgument = 5,
    NoGeodesic = 6,
    LimitExceeded = 7,
    /// A check ran and failed; the report carries the witness.
    CheckFailed = 8,
    Panic = 99,
}

/// A base graph with its endpoints `a` and `b`.
pub struct SpgInstance {
    inner: BaseInstance,
}

/// A shortest path graph with difference indices on its edges.
pub struct SpgGraph {
    inner: SpGraph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> SpgStatus {
    match e {
        Error::Parse { .. } => SpgStatus::Parse,
        Error::UnknownVertex(_) | Error::SelfLoop(_) | Error::DuplicateEdge(..) | Error::DuplicateVertex(_) => {
            SpgStatus::InvalidGraph
        }
        Error::NoGeodesic(..) => SpgStatus::NoGeodesic,
        Error::LimitExceeded { .. } => SpgStatus::LimitExceeded,
        _ => SpgStatus::InvalidArgument,
    }
}

struct Fail(SpgStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

/// Runs `f`, translating errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<SpgStatus, Fail>) -> SpgStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => status,
        Ok(Err(Fail(status, message))) => {
            set_error(&message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            SpgStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(SpgStatus::NullPointer, format!("`{what}` is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(SpgStatus::InvalidUtf8, format!("`{what}` is not UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail(SpgStatus::NullPointer, format!("`{what}` is null")))
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(SpgStatus::NullPointer, format!("`{what}` is null")));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(SpgStatus::InvalidArgument, "string has an interior nul".into()))?;
    put(out, c.into_raw(), "out")
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next `spg_*` call on the same thread.
#[no_mangle]
pub extern "C" fn spg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn spg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a graph (JSON object `{"vertices":[..],"edges":[[u,v],..]}`, or
/// the edge-list text format when `json` is false) with endpoints `a`, `b`.
///
/// # Safety
/// `graph`, `a`, `b` must be nul-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spg_instance_parse(
    graph: *const c_char,
    json: bool,
    a: *const c_char,
    b: *const c_char,
    out: *mut *mut SpgInstance,
) -> SpgStatus {
    guard(|| {
        let src = text(graph, "graph")?;
        let g = if json { Graph::from_json(src)? } else { Graph::from_edge_list(src)? };
        let inner = BaseInstance::new(g, text(a, "a")?, text(b, "b")?)?;
        put(out, Box::into_raw(Box::new(SpgInstance { inner })), "out")?;
        Ok(SpgStatus::Ok)
    })
}

/// # Safety
/// `p` must be null or a handle from [`spg_instance_parse`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn spg_instance_free(p: *mut SpgInstance) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// `d(a, b)`; `SPG_STATUS_NO_GEODESIC` when `a` and `b` are disconnected.
///
/// # Safety
/// `inst` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spg_instance_distance(inst: *const SpgInstance, out: *mut usize) -> SpgStatus {
    guard(|| {
        let inst = &handle(inst, "inst")?.inner;
        let d = inst.distance().ok_or_else(|| {
            Fail(SpgStatus::NoGeodesic, format!("`{}` and `{}` are disconnected", inst.source_name(), inst.target_name()))
        })?;
        put(out, d, "out")?;
        Ok(SpgStatus::Ok)
    })
}

/// Builds `S(G, a, b)`, refusing to materialize more than `limit`
/// geodesics.
///
/// # Safety
/// `inst` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spg_build(inst: *const SpgInstance, limit: u64, out: *mut *mut SpgGraph) -> SpgStatus {
    guard(|| {
        let inner = build_spg(&handle(inst, "inst")?.inner, limit)?;
        put(out, Box::into_raw(Box::new(SpgGraph { inner })), "out")?;
        Ok(SpgStatus::Ok)
    })
}

/// Reads an SpGraph from its JSON form. With an empty `geodesics` list the
/// edges and indices are taken as given, which lets hand-built graphs reach
/// the checkers.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spg_graph_parse(json: *const c_char, out: *mut *mut SpgGraph) -> SpgStatus {
    guard(|| {
        let inner = SpGraph::from_json(text(json, "json")?)?;
        put(out, Box::into_raw(Box::new(SpgGraph { inner })), "out")?;
        Ok(SpgStatus::Ok)
    })
}

/// # Safety
/// `p` must be null or a handle from [`spg_build`] or [`spg_graph_parse`]
/// not yet freed.
#[no_mangle]
pub unsafe extern "C" fn spg_graph_free(p: *mut SpgGraph) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `h` must be a live handle; the out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn spg_graph_counts(h: *const SpgGraph, vertices: *mut usize, edges: *mut usize) -> SpgStatus {
    guard(|| {
        let h = &handle(h, "h")?.inner;
        put(vertices, h.vertex_count(), "vertices")?;
        put(edges, h.edge_count(), "edges")?;
        Ok(SpgStatus::Ok)
    })
}

/// The `k`-th edge `(u, w)` with `u < w` in ascending order, and its
/// difference index.
///
/// # Safety
/// `h` must be a live handle; the out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn spg_graph_edge(
    h: *const SpgGraph,
    k: usize,
    u: *mut usize,
    w: *mut usize,
    index: *mut usize,
) -> SpgStatus {
    guard(|| {
        let h = &handle(h, "h")?.inner;
        let (eu, ew, ei) = h
            .labeled_edges()
            .nth(k)
            .ok_or_else(|| Fail(SpgStatus::InvalidArgument, format!("edge {k} out of range 0..{}", h.edge_count())))?;
        put(u, eu, "u")?;
        put(w, ew, "w")?;
        put(index, ei, "index")?;
        Ok(SpgStatus::Ok)
    })
}

/// Serializes as JSON (`dot` false) or Graphviz DOT (`dot` true).
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spg_graph_export(h: *const SpgGraph, dot: bool, out: *mut *mut c_char) -> SpgStatus {
    guard(|| {
        let h = &handle(h, "h")?.inner;
        put_string(out, if dot { h.to_dot() } else { h.to_json() })?;
        Ok(SpgStatus::Ok)
    })
}

/// Runs the named checker (`p3_c4`, `no_induced_c5`, `claw_in_c4`,
/// `odd_cycle_c4`, `girth5_classification`, `complete_iff_same_index`) and
/// writes its JSON report to `report`. Returns `SPG_STATUS_CHECK_FAILED`
/// when the check fails.
///
/// # Safety
/// `h` must be a live handle, `name` a nul-terminated string and `report`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn spg_check(h: *const SpgGraph, name: *const c_char, report: *mut *mut c_char) -> SpgStatus {
    guard(|| {
        let h = &handle(h, "h")?.inner;
        let limits = Limits::default();
        let r = match text(name, "name")? {
            "p3_c4" => verify::check_p3_c4(h, &limits)?,
            "no_induced_c5" => verify::check_no_induced_c5(h, &limits)?,
            "claw_in_c4" => verify::check_claw_in_c4(h, &limits)?,
            "odd_cycle_c4" => verify::check_odd_cycle_c4(h, &limits)?,
            "girth5_classification" => verify::check_girth5_classification(h),
            "complete_iff_same_index" => verify::complete_iff_same_index(h),
            other => return Err(Fail(SpgStatus::InvalidArgument, format!("unknown check `{other}`"))),
        };
        put_string(report, r.to_json())?;
        Ok(if r.passed { SpgStatus::Ok } else { SpgStatus::CheckFailed })
    })
}

/// The lattice point of a grid geodesic given as a word (`"32121231"`),
/// formatted `(3,2,1,3,1,3,0)`.
///
/// # Safety
/// `dims` must point to `m` readable values, `word` must be a
/// nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn spg_grid_phi(
    dims: *const usize,
    m: usize,
    word: *const c_char,
    out: *mut *mut c_char,
) -> SpgStatus {
    guard(|| {
        if dims.is_null() {
            return Err(Fail(SpgStatus::NullPointer, "`dims` is null".into()));
        }
        let spec = GridSpec::new(std::slice::from_raw_parts(dims, m).to_vec())?;
        let w = MoveSequence::parse(&spec, text(word, "word")?)?;
        put_string(out, grid::phi(&w).to_string())?;
        Ok(SpgStatus::Ok)
    })
}
