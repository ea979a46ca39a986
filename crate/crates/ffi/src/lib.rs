//! C ABI over `fullex`.
//!
//! Graphs live behind an opaque `FullexGraph` handle created by one of the
//! constructors and released with `fullex_graph_free`. Every fallible call
//! returns a `FullexStatus`; results are written through out-pointers, which
//! are left untouched on error. Vertex ids are 0-based.

use fullex::antikekule::anti_kekule_number;
use fullex::extendability::{extendability_number, is_k_extendable, ExtendError, MAX_K};
use fullex::families::{build_tube, recognize_tube};
use fullex::graph::{canonical_code, PlaneCubicGraph};
use fullex::matching::count_perfect_matchings;
use fullex::planar_code;
use std::ffi::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Opaque graph handle.
pub struct FullexGraph {
    inner: PlaneCubicGraph,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FullexStatus {
    Ok = 0,
    NullPointer = 1,
    /// Malformed bytes, bad rotation system or out-of-range argument.
    InvalidInput = 2,
    /// A cubic plane graph, but not a (4,5,6)-fullerene.
    NotFullerene = 3,
    NoPerfectMatching = 4,
    /// The caller's buffer is too small; the needed length was written.
    BufferTooSmall = 5,
    /// The computation exceeded a built-in limit.
    LimitExceeded = 6,
    /// A panic was caught at the boundary.
    Internal = 7,
}

fn guard<F: FnOnce() -> FullexStatus>(f: F) -> FullexStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(FullexStatus::Internal)
}

/// # Safety
/// `g` is null or a live handle.
unsafe fn graph<'a>(g: *const FullexGraph) -> Option<&'a PlaneCubicGraph> {
    g.as_ref().map(|h| &h.inner)
}

fn emit(g: PlaneCubicGraph, out: *mut *mut FullexGraph) -> FullexStatus {
    // SAFETY: callers check `out` for null first.
    unsafe { *out = Box::into_raw(Box::new(FullexGraph { inner: g })) };
    FullexStatus::Ok
}

fn fullerene(g: &PlaneCubicGraph) -> Result<(), FullexStatus> {
    g.validate_fullerene().map(|_| ()).map_err(|_| FullexStatus::NotFullerene)
}

/// Static, NUL-terminated description of a status code.
#[no_mangle]
pub extern "C" fn fullex_status_message(status: FullexStatus) -> *const c_char {
    let s: &'static [u8] = match status {
        FullexStatus::Ok => b"ok\0",
        FullexStatus::NullPointer => b"null pointer argument\0",
        FullexStatus::InvalidInput => b"invalid input\0",
        FullexStatus::NotFullerene => b"not a (4,5,6)-fullerene\0",
        FullexStatus::NoPerfectMatching => b"graph has no perfect matching\0",
        FullexStatus::BufferTooSmall => b"buffer too small\0",
        FullexStatus::LimitExceeded => b"built-in limit exceeded\0",
        FullexStatus::Internal => b"internal error\0",
    };
    s.as_ptr().cast()
}

/// Library version, NUL-terminated.
#[no_mangle]
pub extern "C" fn fullex_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Decodes the first graph of a planar_code buffer (header included).
///
/// # Safety
/// `bytes` points to `len` readable bytes; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn fullex_graph_from_planar_code(
    bytes: *const u8,
    len: usize,
    out: *mut *mut FullexGraph,
) -> FullexStatus {
    guard(|| {
        if bytes.is_null() || out.is_null() {
            return FullexStatus::NullPointer;
        }
        let data = std::slice::from_raw_parts(bytes, len);
        match planar_code::decode(data) {
            Ok(mut gs) if !gs.is_empty() => emit(gs.swap_remove(0), out),
            _ => FullexStatus::InvalidInput,
        }
    })
}

/// Builds a graph from `3 * n` neighbour ids: vertex `v`'s clockwise
/// rotation is `rot[3v], rot[3v+1], rot[3v+2]`.
///
/// # Safety
/// `rot` points to `3 * n` readable values; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn fullex_graph_from_rotation(
    n: usize,
    rot: *const usize,
    out: *mut *mut FullexGraph,
) -> FullexStatus {
    guard(|| {
        if rot.is_null() || out.is_null() {
            return FullexStatus::NullPointer;
        }
        let Some(total) = n.checked_mul(3) else {
            return FullexStatus::InvalidInput;
        };
        let flat = std::slice::from_raw_parts(rot, total);
        let lists = flat.chunks(3).map(<[usize]>::to_vec).collect();
        match PlaneCubicGraph::from_rotation(lists) {
            Ok(g) => emit(g, out),
            Err(_) => FullexStatus::InvalidInput,
        }
    })
}

/// The tube with `layers >= 1` hexagon layers.
///
/// # Safety
/// `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn fullex_tube_new(layers: usize, out: *mut *mut FullexGraph) -> FullexStatus {
    guard(|| {
        if out.is_null() {
            return FullexStatus::NullPointer;
        }
        match build_tube(layers) {
            Ok((g, _)) => emit(g, out),
            Err(_) => FullexStatus::InvalidInput,
        }
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `g` is null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fullex_graph_free(g: *mut FullexGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fullex_graph_order(g: *const FullexGraph) -> usize {
    graph(g).map_or(0, PlaneCubicGraph::order)
}

/// Face counts by length; `NotFullerene` if other face lengths occur.
///
/// # Safety
/// `g` is a live handle; the out-pointers are writable.
#[no_mangle]
pub unsafe extern "C" fn fullex_face_counts(
    g: *const FullexGraph,
    p4: *mut usize,
    p5: *mut usize,
    p6: *mut usize,
) -> FullexStatus {
    guard(|| {
        let Some(g) = graph(g) else { return FullexStatus::NullPointer };
        if p4.is_null() || p5.is_null() || p6.is_null() {
            return FullexStatus::NullPointer;
        }
        match g.validate_fullerene() {
            Ok(inv) => {
                (*p4, *p5, *p6) = (inv.p4, inv.p5, inv.p6);
                FullexStatus::Ok
            }
            Err(_) => FullexStatus::NotFullerene,
        }
    })
}

fn extend_status(e: ExtendError) -> FullexStatus {
    match e {
        ExtendError::NoPerfectMatching => FullexStatus::NoPerfectMatching,
        ExtendError::KTooLarge(_) => FullexStatus::LimitExceeded,
        _ => FullexStatus::InvalidInput,
    }
}

/// Decides k-extendability for `1 <= k <= 3`. On failure, if `witness` is
/// not null, the first non-extendable matching is written there as `2k`
/// vertex ids (edge endpoints in order).
///
/// # Safety
/// `g` is a live handle; `extendable` is writable; `witness` is null or
/// has room for `2k` values.
#[no_mangle]
pub unsafe extern "C" fn fullex_is_k_extendable(
    g: *const FullexGraph,
    k: usize,
    extendable: *mut bool,
    witness: *mut usize,
) -> FullexStatus {
    guard(|| {
        let Some(g) = graph(g) else { return FullexStatus::NullPointer };
        if extendable.is_null() {
            return FullexStatus::NullPointer;
        }
        if !(1..=MAX_K).contains(&k) {
            return FullexStatus::InvalidInput;
        }
        if let Err(s) = fullerene(g) {
            return s;
        }
        match is_k_extendable(&g.to_simple(), k) {
            Ok(r) => {
                *extendable = r.extendable;
                if let (Some(w), false) = (&r.witness, witness.is_null()) {
                    let out = std::slice::from_raw_parts_mut(witness, 2 * k);
                    for (i, e) in w.edges().iter().enumerate() {
                        out[2 * i] = e.0;
                        out[2 * i + 1] = e.1;
                    }
                }
                FullexStatus::Ok
            }
            Err(e) => extend_status(e),
        }
    })
}

/// Largest `k <= 3` for which the graph is k-extendable.
///
/// # Safety
/// `g` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn fullex_extendability(g: *const FullexGraph, out: *mut usize) -> FullexStatus {
    guard(|| {
        let Some(g) = graph(g) else { return FullexStatus::NullPointer };
        if out.is_null() {
            return FullexStatus::NullPointer;
        }
        if let Err(s) = fullerene(g) {
            return s;
        }
        match extendability_number(&g.to_simple(), MAX_K) {
            Ok(k) => {
                *out = k;
                FullexStatus::Ok
            }
            Err(e) => extend_status(e),
        }
    })
}

/// Anti-Kekulé number.
///
/// # Safety
/// `g` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn fullex_anti_kekule_number(g: *const FullexGraph, out: *mut usize) -> FullexStatus {
    guard(|| {
        let Some(g) = graph(g) else { return FullexStatus::NullPointer };
        if out.is_null() {
            return FullexStatus::NullPointer;
        }
        if let Err(s) = fullerene(g) {
            return s;
        }
        match anti_kekule_number(&g.to_simple()) {
            Ok(r) => {
                *out = r.number;
                FullexStatus::Ok
            }
            Err(_) => FullexStatus::LimitExceeded,
        }
    })
}

/// Number of perfect matchings (at most 64 vertices).
///
/// # Safety
/// `g` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn fullex_count_perfect_matchings(g: *const FullexGraph, out: *mut u64) -> FullexStatus {
    guard(|| {
        let Some(g) = graph(g) else { return FullexStatus::NullPointer };
        if out.is_null() {
            return FullexStatus::NullPointer;
        }
        match count_perfect_matchings(&g.to_simple()) {
            Ok(c) => {
                *out = c;
                FullexStatus::Ok
            }
            Err(_) => FullexStatus::LimitExceeded,
        }
    })
}

/// Number of tube layers if the graph is a tube, else 0.
///
/// # Safety
/// `g` is a live handle; `layers` is writable.
#[no_mangle]
pub unsafe extern "C" fn fullex_tube_layers(g: *const FullexGraph, layers: *mut usize) -> FullexStatus {
    guard(|| {
        let Some(g) = graph(g) else { return FullexStatus::NullPointer };
        if layers.is_null() {
            return FullexStatus::NullPointer;
        }
        if let Err(s) = fullerene(g) {
            return s;
        }
        *layers = recognize_tube(g).map_or(0, |d| d.n_layers);
        FullexStatus::Ok
    })
}

/// Canonical code (equal for isomorphic graphs). Writes the length to
/// `len`; copies the code into `buf` if `cap` suffices, otherwise returns
/// `BufferTooSmall`. Pass `buf = NULL, cap = 0` to query the length.
///
/// # Safety
/// `g` is a live handle; `len` is writable; `buf` is null or has room for
/// `cap` bytes.
#[no_mangle]
pub unsafe extern "C" fn fullex_canonical_code(
    g: *const FullexGraph,
    buf: *mut u8,
    cap: usize,
    len: *mut usize,
) -> FullexStatus {
    guard(|| {
        let Some(g) = graph(g) else { return FullexStatus::NullPointer };
        if len.is_null() {
            return FullexStatus::NullPointer;
        }
        let code = canonical_code(g);
        *len = code.len();
        if buf.is_null() || cap < code.len() {
            return FullexStatus::BufferTooSmall;
        }
        std::ptr::copy_nonoverlapping(code.as_ptr(), buf, code.len());
        FullexStatus::Ok
    })
}
