//! C ABI over the eqtree core.
//!
//! Graphs cross the boundary as opaque `EqtreeGraph` handles created from
//! graph6 strings. Every fallible call returns an `EqtreeStatus`; on failure
//! `eqtree_last_error_message` describes the most recent error on the calling
//! thread. A negative `k` means no degree bound (every class a forest).

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use eqtree::graph::{encode_graph6, parse_graph6};
use eqtree::oracle;
use eqtree::theorems::predicate_va_equals_half;
use eqtree::{validate_tree_coloring, Coloring, DegreeBound, Graph};

/// Opaque graph handle.
pub struct EqtreeGraph {
    inner: Graph,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EqtreeStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidGraph6 = 2,
    InvalidArgument = 3,
    BufferTooSmall = 4,
    Panic = 5,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let text = CString::new(message.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
}

fn fail(status: EqtreeStatus, message: impl Into<String>) -> EqtreeStatus {
    set_error(message);
    status
}

fn guarded(body: impl FnOnce() -> EqtreeStatus) -> EqtreeStatus {
    catch_unwind(AssertUnwindSafe(body))
        .unwrap_or_else(|_| fail(EqtreeStatus::Panic, "internal panic"))
}

fn bound(k: i32) -> DegreeBound {
    u32::try_from(k).map_or(DegreeBound::Unbounded, DegreeBound::Finite)
}

/// Message for the last failed call on this thread, or NULL if none. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn eqtree_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses a NUL-terminated graph6 string into a new handle.
///
/// # Safety
/// `text` must be NULL or a valid NUL-terminated string; `out` must be NULL or
/// writable.
#[no_mangle]
pub unsafe extern "C" fn eqtree_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut EqtreeGraph,
) -> EqtreeStatus {
    guarded(|| {
        if text.is_null() || out.is_null() {
            return fail(EqtreeStatus::NullPointer, "null argument");
        }
        let bytes = CStr::from_ptr(text).to_bytes();
        match parse_graph6(bytes) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(EqtreeGraph { inner }));
                EqtreeStatus::Ok
            }
            Err(e) => fail(EqtreeStatus::InvalidGraph6, e.to_string()),
        }
    })
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `graph` must be NULL or a handle from `eqtree_graph_from_graph6` that has
/// not been freed.
#[no_mangle]
pub unsafe extern "C" fn eqtree_graph_free(graph: *mut EqtreeGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Number of vertices, or 0 for NULL.
///
/// # Safety
/// `graph` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn eqtree_graph_order(graph: *const EqtreeGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.inner.order())
}

/// graph6 encoding as a new string to be released with `eqtree_string_free`;
/// NULL for a NULL handle.
///
/// # Safety
/// `graph` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn eqtree_graph_to_graph6(graph: *const EqtreeGraph) -> *mut c_char {
    match graph.as_ref() {
        Some(g) => CString::new(encode_graph6(&g.inner)).map_or(ptr::null_mut(), CString::into_raw),
        None => {
            set_error("null argument");
            ptr::null_mut()
        }
    }
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn eqtree_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Strong equitable vertex k-arboricity.
///
/// # Safety
/// `graph` must be NULL or a live handle; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn eqtree_strong_arboricity(
    graph: *const EqtreeGraph,
    k: i32,
    out: *mut usize,
) -> EqtreeStatus {
    guarded(|| match (graph.as_ref(), out.as_mut()) {
        (Some(g), Some(out)) => {
            *out = oracle::strong_equitable_vertex_arboricity(&g.inner, bound(k));
            EqtreeStatus::Ok
        }
        _ => fail(EqtreeStatus::NullPointer, "null argument"),
    })
}

/// Equitable vertex k-arboricity: the least feasible number of classes.
///
/// # Safety
/// `graph` must be NULL or a live handle; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn eqtree_equitable_arboricity(
    graph: *const EqtreeGraph,
    k: i32,
    out: *mut usize,
) -> EqtreeStatus {
    guarded(|| match (graph.as_ref(), out.as_mut()) {
        (Some(g), Some(out)) => {
            *out = oracle::equitable_vertex_arboricity(&g.inner, bound(k));
            EqtreeStatus::Ok
        }
        _ => fail(EqtreeStatus::NullPointer, "null argument"),
    })
}

/// Searches for an equitable `(t, k)`-tree-coloring. On success `*found`
/// tells whether one exists and, if so, `assignment[v]` holds the class of
/// vertex `v`. `len` must be at least the graph order.
///
/// # Safety
/// `graph` must be NULL or a live handle; `assignment` must be NULL or point to
/// `len` writable elements; `found` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn eqtree_find_coloring(
    graph: *const EqtreeGraph,
    t: usize,
    k: i32,
    assignment: *mut usize,
    len: usize,
    found: *mut bool,
) -> EqtreeStatus {
    guarded(|| {
        let (Some(g), Some(found)) = (graph.as_ref(), found.as_mut()) else {
            return fail(EqtreeStatus::NullPointer, "null argument");
        };
        let n = g.inner.order();
        if n > 0 && assignment.is_null() {
            return fail(EqtreeStatus::NullPointer, "null assignment buffer");
        }
        if len < n {
            return fail(
                EqtreeStatus::BufferTooSmall,
                format!("assignment buffer holds {len} entries, graph has {n} vertices"),
            );
        }
        match oracle::exists_equitable_tree_coloring(&g.inner, t, bound(k)) {
            Some(c) => {
                if n > 0 {
                    std::slice::from_raw_parts_mut(assignment, n).copy_from_slice(c.assignment());
                }
                *found = true;
            }
            None => *found = false,
        }
        EqtreeStatus::Ok
    })
}

/// Checks a coloring given as `assignment[v]` = class of `v`, classes `0..t`.
///
/// # Safety
/// `graph` must be NULL or a live handle; `assignment` must point to `len`
/// readable elements; `valid` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn eqtree_validate_coloring(
    graph: *const EqtreeGraph,
    assignment: *const usize,
    len: usize,
    t: usize,
    k: i32,
    valid: *mut bool,
) -> EqtreeStatus {
    guarded(|| {
        let (Some(g), Some(valid)) = (graph.as_ref(), valid.as_mut()) else {
            return fail(EqtreeStatus::NullPointer, "null argument");
        };
        if len > 0 && assignment.is_null() {
            return fail(EqtreeStatus::NullPointer, "null assignment");
        }
        let slice = if len == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(assignment, len)
        };
        let report = Coloring::new(t, slice.to_vec())
            .and_then(|c| validate_tree_coloring(&g.inner, &c, bound(k)));
        match report {
            Ok(r) => {
                *valid = r.valid;
                EqtreeStatus::Ok
            }
            Err(e) => fail(EqtreeStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// Whether the complement-matching characterization of strong arboricity
/// `⌈n/2⌉` holds. Needs at least 2 vertices.
///
/// # Safety
/// `graph` must be NULL or a live handle; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn eqtree_predicate_va_equals_half(
    graph: *const EqtreeGraph,
    out: *mut bool,
) -> EqtreeStatus {
    guarded(|| match (graph.as_ref(), out.as_mut()) {
        (Some(g), Some(out)) => match predicate_va_equals_half(&g.inner) {
            Ok(v) => {
                *out = v;
                EqtreeStatus::Ok
            }
            Err(e) => fail(EqtreeStatus::InvalidArgument, e.to_string()),
        },
        _ => fail(EqtreeStatus::NullPointer, "null argument"),
    })
}
