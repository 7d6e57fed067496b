//! C ABI for the series library, so other languages can bind without
//! touching Rust types: opaque graph handles, integer status codes, and
//! JSON strings for everything structured (series coefficients are
//! arbitrary-precision integers, which no fixed-width C type can carry).
//!
//! Conventions:
//! - Functions return a [`MckayStatus`]; `MCKAY_STATUS_OK` is zero.
//! - Output pointers are written only on success.
//! - Every `char*` handed out is owned by the caller and must be released
//!   with `mckay_string_free`; graph handles with `mckay_graph_free`.
//! - On failure, `mckay_last_error_message` returns a description of the
//!   most recent error on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

use mckay::cli::{self, Format, LoadedGraph, Source};
use mckay::repgraph::{graph_from_chartable, graph_from_json, CharTable};
use mckay::{Error, GroupKind};

/// Status codes returned by every entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MckayStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// An argument was understood but rejected (unknown group, bad node,
    /// out-of-range parameter).
    InvalidArgument = 3,
    /// The input data was malformed or inconsistent (graph JSON, character
    /// table, non-self-dual module where a series was requested).
    BadInput = 4,
    /// An internal computation failed; indicates a library bug.
    ComputeError = 5,
    /// A verification suite ran to completion and found failures.
    VerifyFailed = 6,
}

/// Opaque handle to a loaded representation graph.
pub struct MckayGraph {
    loaded: LoadedGraph,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(message: impl Into<String>) {
    LAST_ERROR.with(|e| *e.borrow_mut() = message.into());
}

fn status_of(err: &Error) -> MckayStatus {
    match err {
        Error::InvalidParameter(_) | Error::InvalidKind(_) => MckayStatus::InvalidArgument,
        Error::Internal(_) => MckayStatus::ComputeError,
        _ => MckayStatus::BadInput,
    }
}

fn fail(err: Error) -> MckayStatus {
    let status = status_of(&err);
    set_error(err.to_string());
    status
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, MckayStatus> {
    if ptr.is_null() {
        set_error("null string argument");
        return Err(MckayStatus::NullPointer);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8");
        MckayStatus::InvalidUtf8
    })
}

fn write_string(out: *mut *mut c_char, value: String) -> MckayStatus {
    if out.is_null() {
        set_error("null output pointer");
        return MckayStatus::NullPointer;
    }
    // interior NULs cannot occur in our JSON/text output
    let c = CString::new(value).expect("output contains no interior NUL");
    unsafe { *out = c.into_raw() };
    MckayStatus::Ok
}

fn write_graph(out: *mut *mut MckayGraph, loaded: LoadedGraph) -> MckayStatus {
    if out.is_null() {
        set_error("null output pointer");
        return MckayStatus::NullPointer;
    }
    unsafe { *out = Box::into_raw(Box::new(MckayGraph { loaded })) };
    MckayStatus::Ok
}

/// Last error message on this thread, as a fresh string the caller must
/// release with `mckay_string_free`. Empty if no error has occurred.
#[no_mangle]
pub extern "C" fn mckay_last_error_message() -> *mut c_char {
    let message = LAST_ERROR.with(|e| e.borrow().clone());
    CString::new(message).unwrap_or_default().into_raw()
}

/// Releases a string allocated by this library. Null is a no-op.
///
/// # Safety
/// `s` must have been returned by this library and not freed before.
#[no_mangle]
pub unsafe extern "C" fn mckay_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Loads a catalog group (`"C5"`, `"D6"`, `"T"`, `"O"`, `"I"`, `"S4"`).
///
/// # Safety
/// `spec` must be a valid NUL-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mckay_graph_from_group(
    spec: *const c_char,
    out: *mut *mut MckayGraph,
) -> MckayStatus {
    let spec = match read_str(spec) {
        Ok(s) => s,
        Err(status) => return status,
    };
    let kind = match GroupKind::parse(spec) {
        Ok(k) => k,
        Err(e) => return fail(e),
    };
    match cli::load_source(&Source::Group(kind)) {
        Ok(loaded) => write_graph(out, loaded),
        Err(e) => fail(e),
    }
}

/// Loads a graph from its JSON description.
///
/// # Safety
/// `json` must be a valid NUL-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mckay_graph_from_json(
    json: *const c_char,
    out: *mut *mut MckayGraph,
) -> MckayStatus {
    let text = match read_str(json) {
        Ok(s) => s,
        Err(status) => return status,
    };
    match graph_from_json(text) {
        Ok(graph) => write_graph(
            out,
            LoadedGraph {
                graph,
                kind: None,
                source: "json".into(),
                warnings: Vec::new(),
            },
        ),
        Err(e) => fail(e),
    }
}

/// Builds a graph from character-table CSV text. `v_label` selects the
/// module; pass null to use the table's `#V=` directive.
///
/// # Safety
/// `csv` must be a valid NUL-terminated string; `v_label` null or valid;
/// `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mckay_graph_from_chartable(
    csv: *const c_char,
    v_label: *const c_char,
    out: *mut *mut MckayGraph,
) -> MckayStatus {
    let text = match read_str(csv) {
        Ok(s) => s,
        Err(status) => return status,
    };
    let table = match CharTable::parse_csv(text) {
        Ok(t) => t,
        Err(e) => return fail(e),
    };
    let label = if v_label.is_null() {
        match &table.v_label {
            Some(l) => l.clone(),
            None => {
                return fail(Error::InvalidParameter(
                    "no module selected: pass v_label or add a #V= directive".into(),
                ))
            }
        }
    } else {
        match read_str(v_label) {
            Ok(s) => s.to_string(),
            Err(status) => return status,
        }
    };
    let Some(v_index) = table.irrep_index(&label) else {
        return fail(Error::InvalidParameter(format!(
            "irrep `{label}` not found in the table"
        )));
    };
    match graph_from_chartable(&table, v_index) {
        Ok(graph) => {
            let mut warnings = Vec::new();
            if !graph.is_symmetric() {
                warnings.push(format!(
                    "module `{label}` is not self-dual: walk counts are available, series are not"
                ));
            }
            write_graph(
                out,
                LoadedGraph {
                    graph,
                    kind: None,
                    source: format!("chartable (V = {label})"),
                    warnings,
                },
            )
        }
        Err(e) => fail(e),
    }
}

/// Releases a graph handle. Null is a no-op.
///
/// # Safety
/// `g` must have been returned by this library and not freed before.
#[no_mangle]
pub unsafe extern "C" fn mckay_graph_free(g: *mut MckayGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of nodes, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a valid graph handle.
#[no_mangle]
pub unsafe extern "C" fn mckay_graph_node_count(g: *const MckayGraph) -> u32 {
    g.as_ref().map_or(0, |g| g.loaded.graph.node_count() as u32)
}

/// Label of node `index`, or null when out of range. The caller frees the
/// string with `mckay_string_free`.
///
/// # Safety
/// `g` must be null or a valid graph handle.
#[no_mangle]
pub unsafe extern "C" fn mckay_graph_node_label(g: *const MckayGraph, index: u32) -> *mut c_char {
    let Some(handle) = g.as_ref() else {
        return std::ptr::null_mut();
    };
    match handle.loaded.graph.labels.get(index as usize) {
        Some(label) => CString::new(label.clone()).unwrap_or_default().into_raw(),
        None => std::ptr::null_mut(),
    }
}

/// Serializes the graph to its JSON interchange form.
///
/// # Safety
/// `g` must be a valid graph handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mckay_graph_to_json(
    g: *const MckayGraph,
    out: *mut *mut c_char,
) -> MckayStatus {
    let Some(handle) = g.as_ref() else {
        set_error("null graph handle");
        return MckayStatus::NullPointer;
    };
    match mckay::repgraph::graph_to_json(&handle.loaded.graph) {
        Ok(json) => write_string(out, json),
        Err(e) => fail(e),
    }
}

/// Poincaré series of the named node as a JSON document (reduced fraction,
/// determinant pair, and `terms` coefficients).
///
/// # Safety
/// `g` must be a valid graph handle; `node` a valid string; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn mckay_series_json(
    g: *const MckayGraph,
    node: *const c_char,
    terms: u32,
    out: *mut *mut c_char,
) -> MckayStatus {
    let Some(handle) = g.as_ref() else {
        set_error("null graph handle");
        return MckayStatus::NullPointer;
    };
    let node = match read_str(node) {
        Ok(s) => s,
        Err(status) => return status,
    };
    match cli::cmd_series(&handle.loaded, node, terms as usize, Format::Json) {
        Ok(json) => write_string(out, json),
        Err(e) => fail(e),
    }
}

/// Bratteli levels `0..=levels` as a JSON document.
///
/// # Safety
/// `g` must be a valid graph handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mckay_bratteli_json(
    g: *const MckayGraph,
    levels: u32,
    out: *mut *mut c_char,
) -> MckayStatus {
    let Some(handle) = g.as_ref() else {
        set_error("null graph handle");
        return MckayStatus::NullPointer;
    };
    match cli::cmd_bratteli(&handle.loaded, levels as usize, Format::Json) {
        Ok(json) => write_string(out, json),
        Err(e) => fail(e),
    }
}

/// Runs a verification suite (`"all"`, `"chebyshev"`, `"steinberg"`,
/// `"closedform"`, `"molien"`, `"oracle"`) and writes its JSON report.
/// Returns `VerifyFailed` when the report contains failures.
///
/// # Safety
/// `suite` must be a valid NUL-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mckay_verify_json(
    suite: *const c_char,
    tolerance: f64,
    out: *mut *mut c_char,
) -> MckayStatus {
    let suite = match read_str(suite) {
        Ok(s) => s,
        Err(status) => return status,
    };
    match cli::cmd_verify(suite, tolerance, Format::Json) {
        Ok((json, passed)) => {
            let status = write_string(out, json);
            if status != MckayStatus::Ok {
                return status;
            }
            if passed {
                MckayStatus::Ok
            } else {
                set_error(format!("verification suite `{suite}` reported failures"));
                MckayStatus::VerifyFailed
            }
        }
        Err(e) => fail(e),
    }
}
