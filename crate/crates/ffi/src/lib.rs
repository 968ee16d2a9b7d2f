//! C ABI over the defekt toolkit. Graphs are opaque handles created and
//! destroyed here; every function reports a status code and writes results
//! through out pointers. Strings returned through out pointers are owned by
//! the caller and must be released with `defekt_string_free`.

use defekt::{canonical_form, chi_k, emit_graph6, is_planar, parse_graph6, SmallGraph};
use std::ffi::{c_char, CStr, CString};

/// Opaque graph handle.
pub struct DefektGraph {
    inner: SmallGraph,
}

/// Status code returned by every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DefektStatus {
    /// The call succeeded.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// The input was not a valid graph6 string.
    InvalidGraph6 = 2,
    /// A numeric argument was outside the supported range.
    OutOfRange = 3,
}

fn graph_ref<'a>(g: *const DefektGraph) -> Option<&'a SmallGraph> {
    unsafe { g.as_ref().map(|h| &h.inner) }
}

fn string_out(text: String, out: *mut *mut c_char) -> DefektStatus {
    match CString::new(text) {
        Ok(s) => {
            unsafe { *out = s.into_raw() };
            DefektStatus::Ok
        }
        Err(_) => DefektStatus::InvalidGraph6,
    }
}

/// Parse a graph6 string into a new graph handle.
///
/// # Safety
/// `text` must be a valid NUL-terminated C string and `out` a valid pointer.
/// On `Ok` the handle written to `out` must later be released with
/// `defekt_graph_free`.
#[no_mangle]
pub unsafe extern "C" fn defekt_graph_parse_g6(
    text: *const c_char,
    out: *mut *mut DefektGraph,
) -> DefektStatus {
    if text.is_null() || out.is_null() {
        return DefektStatus::NullPointer;
    }
    let Ok(text) = CStr::from_ptr(text).to_str() else {
        return DefektStatus::InvalidGraph6;
    };
    match parse_graph6(text.trim()) {
        Ok(g) => {
            *out = Box::into_raw(Box::new(DefektGraph { inner: g }));
            DefektStatus::Ok
        }
        Err(_) => DefektStatus::InvalidGraph6,
    }
}

/// Release a graph handle. Null is a no-op.
///
/// # Safety
/// `g` must be null or a handle produced by this library that has not been
/// freed before.
#[no_mangle]
pub unsafe extern "C" fn defekt_graph_free(g: *mut DefektGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn defekt_graph_order(
    g: *const DefektGraph,
    out: *mut u32,
) -> DefektStatus {
    let (Some(g), false) = (graph_ref(g), out.is_null()) else {
        return DefektStatus::NullPointer;
    };
    *out = g.order() as u32;
    DefektStatus::Ok
}

/// Number of edges.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn defekt_graph_edge_count(
    g: *const DefektGraph,
    out: *mut u32,
) -> DefektStatus {
    let (Some(g), false) = (graph_ref(g), out.is_null()) else {
        return DefektStatus::NullPointer;
    };
    *out = g.edge_count() as u32;
    DefektStatus::Ok
}

/// Whether the graph has no triangle; writes 0 or 1.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn defekt_graph_is_triangle_free(
    g: *const DefektGraph,
    out: *mut u8,
) -> DefektStatus {
    let (Some(g), false) = (graph_ref(g), out.is_null()) else {
        return DefektStatus::NullPointer;
    };
    *out = g.is_triangle_free() as u8;
    DefektStatus::Ok
}

/// Whether the graph is planar; writes 0 or 1.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn defekt_graph_is_planar(
    g: *const DefektGraph,
    out: *mut u8,
) -> DefektStatus {
    let (Some(g), false) = (graph_ref(g), out.is_null()) else {
        return DefektStatus::NullPointer;
    };
    *out = is_planar(g) as u8;
    DefektStatus::Ok
}

/// The k-defective chromatic number.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn defekt_graph_chi(
    g: *const DefektGraph,
    k: u32,
    out: *mut u32,
) -> DefektStatus {
    let (Some(g), false) = (graph_ref(g), out.is_null()) else {
        return DefektStatus::NullPointer;
    };
    if k > 32 {
        return DefektStatus::OutOfRange;
    }
    *out = chi_k(g, k as usize) as u32;
    DefektStatus::Ok
}

/// The graph6 encoding of the graph as given.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer; the string written
/// to `out` must be released with `defekt_string_free`.
#[no_mangle]
pub unsafe extern "C" fn defekt_graph_emit_g6(
    g: *const DefektGraph,
    out: *mut *mut c_char,
) -> DefektStatus {
    let (Some(g), false) = (graph_ref(g), out.is_null()) else {
        return DefektStatus::NullPointer;
    };
    string_out(emit_graph6(g), out)
}

/// The canonical graph6 form, equal for exactly the isomorphic graphs.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer; the string written
/// to `out` must be released with `defekt_string_free`.
#[no_mangle]
pub unsafe extern "C" fn defekt_graph_canonical_g6(
    g: *const DefektGraph,
    out: *mut *mut c_char,
) -> DefektStatus {
    let (Some(g), false) = (graph_ref(g), out.is_null()) else {
        return DefektStatus::NullPointer;
    };
    string_out(canonical_form(g).key, out)
}

/// Release a string returned by this library. Null is a no-op.
///
/// # Safety
/// `s` must be null or a string produced by this library that has not been
/// freed before.
#[no_mangle]
pub unsafe extern "C" fn defekt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
