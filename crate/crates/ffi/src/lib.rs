// SPDX-License-Identifier: Apache-2.0

//! C interface to `sqcolor`.
//!
//! Graphs are opaque `SqGraph` handles created by the `sq_graph_*`
//! constructors and released with `sq_graph_free`. Every fallible call
//! returns an `SqStatus`; on failure a description is available from
//! `sq_last_error` until the next call on the same thread. Strings returned
//! through `char **` out-parameters are owned by the caller and must be
//! released with `sq_string_free`.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use sqcolor::coloring::{exact_chromatic, max_clique, square_color_witness, Budget};
use sqcolor::constructions::{g_family, named_graph, random_two_degenerate};
use sqcolor::{degeneracy_ordering, mad, Error, Graph};

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SqStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    UnknownConstruction = 4,
    /// The search stopped early; out-parameters hold valid bounds.
    BudgetExhausted = 5,
    /// A value does not fit the output type.
    Overflow = 6,
    Internal = 7,
}

/// Opaque graph handle.
pub struct SqGraph {
    graph: Graph,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn fail(status: SqStatus, msg: impl Into<String>) -> SqStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> SqStatus {
    let status = match e {
        Error::Parse { .. } | Error::HeaderMismatch { .. } => SqStatus::ParseError,
        Error::UnknownConstruction(_) => SqStatus::UnknownConstruction,
        _ => SqStatus::InvalidArgument,
    };
    fail(status, e.to_string())
}

/// Runs `f`, converting panics into `Internal`.
fn guard(f: impl FnOnce() -> SqStatus) -> SqStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => fail(SqStatus::Internal, "internal panic"),
    }
}

unsafe fn graph_ref<'a>(g: *const SqGraph) -> Result<&'a Graph, SqStatus> {
    // SAFETY: the caller passes null or a live handle from this library.
    unsafe { g.as_ref() }.map(|h| &h.graph).ok_or_else(|| fail(SqStatus::NullPointer, "null graph handle"))
}

unsafe fn emit_graph(out: *mut *mut SqGraph, graph: Graph) -> SqStatus {
    // SAFETY: `out` was checked for null by the caller.
    unsafe { *out = Box::into_raw(Box::new(SqGraph { graph })) };
    SqStatus::Ok
}

unsafe fn text_arg<'a>(s: *const c_char) -> Result<&'a str, SqStatus> {
    if s.is_null() {
        return Err(fail(SqStatus::NullPointer, "null string"));
    }
    // SAFETY: the caller passes a NUL-terminated string.
    unsafe { CStr::from_ptr(s) }.to_str().map_err(|_| fail(SqStatus::InvalidArgument, "string is not UTF-8"))
}

fn to_size(v: Option<usize>) -> Result<usize, SqStatus> {
    v.ok_or_else(|| fail(SqStatus::Overflow, "value does not fit"))
}

macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

macro_rules! non_null {
    ($($p:ident),+) => {
        $(if $p.is_null() {
            return fail(SqStatus::NullPointer, concat!("null pointer: ", stringify!($p)));
        })+
    };
}

fn budget(max_nodes: u64) -> Budget {
    if max_nodes == 0 {
        Budget::unlimited()
    } else {
        Budget::nodes(max_nodes)
    }
}

/// Message for the last failed call on this thread; empty after success.
/// Valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn sq_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Static name of a status code.
#[no_mangle]
pub extern "C" fn sq_status_name(status: SqStatus) -> *const c_char {
    let s: &'static CStr = match status {
        SqStatus::Ok => c"ok",
        SqStatus::NullPointer => c"null pointer",
        SqStatus::InvalidArgument => c"invalid argument",
        SqStatus::ParseError => c"parse error",
        SqStatus::UnknownConstruction => c"unknown construction",
        SqStatus::BudgetExhausted => c"budget exhausted",
        SqStatus::Overflow => c"overflow",
        SqStatus::Internal => c"internal error",
    };
    s.as_ptr()
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`2 * edge_count` entries). `edges` may be null when
/// `edge_count` is 0.
#[no_mangle]
pub unsafe extern "C" fn sq_graph_new(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut SqGraph,
) -> SqStatus {
    guard(|| {
        non_null!(out);
        if edges.is_null() && edge_count > 0 {
            return fail(SqStatus::NullPointer, "null edge array");
        }
        let flat = if edge_count == 0 {
            &[][..]
        } else {
            let len = try_status!(to_size(edge_count.checked_mul(2)));
            // SAFETY: the caller provides `2 * edge_count` readable entries.
            unsafe { std::slice::from_raw_parts(edges, len) }
        };
        let pairs = flat.chunks_exact(2).map(|p| (p[0], p[1]));
        match Graph::new(n, pairs) {
            Ok(g) => unsafe { emit_graph(out, g) },
            Err(e) => from_error(e),
        }
    })
}

/// Parses the edge-list or DIMACS text format.
#[no_mangle]
pub unsafe extern "C" fn sq_graph_parse(text: *const c_char, out: *mut *mut SqGraph) -> SqStatus {
    guard(|| {
        non_null!(out);
        let text = try_status!(unsafe { text_arg(text) });
        match sqcolor::io::parse_graph(text) {
            Ok(g) => unsafe { emit_graph(out, g) },
            Err(e) => from_error(e),
        }
    })
}

/// One of `petersen`, `figure2`, `figure3_full`, `figure3_reduced`,
/// `path(N)`, `cycle(N)`.
#[no_mangle]
pub unsafe extern "C" fn sq_graph_named(name: *const c_char, out: *mut *mut SqGraph) -> SqStatus {
    guard(|| {
        non_null!(out);
        let name = try_status!(unsafe { text_arg(name) });
        match named_graph(name) {
            Ok((g, _)) => unsafe { emit_graph(out, g) },
            Err(e) => from_error(e),
        }
    })
}

/// `K_n` with edges blown up into `K_{2,t}`; needs `n >= 4`, `t >= 2`.
#[no_mangle]
pub unsafe extern "C" fn sq_graph_g_family(n: usize, t: usize, out: *mut *mut SqGraph) -> SqStatus {
    guard(|| {
        non_null!(out);
        match g_family(n, t) {
            Ok((g, _)) => unsafe { emit_graph(out, g) },
            Err(e) => from_error(e),
        }
    })
}

/// Seeded random 2-degenerate graph; needs `nv >= 3`, `degree_cap >= 2`.
#[no_mangle]
pub unsafe extern "C" fn sq_graph_random_two_degenerate(
    nv: usize,
    degree_cap: usize,
    seed: u64,
    out: *mut *mut SqGraph,
) -> SqStatus {
    guard(|| {
        non_null!(out);
        match random_two_degenerate(nv, degree_cap, seed) {
            Ok(g) => unsafe { emit_graph(out, g) },
            Err(e) => from_error(e),
        }
    })
}

/// Releases a handle; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn sq_graph_free(g: *mut SqGraph) {
    if !g.is_null() {
        // SAFETY: `g` came from `Box::into_raw` in this library.
        drop(unsafe { Box::from_raw(g) });
    }
}

/// Writes the vertex count, edge count and maximum degree. Any output
/// pointer may be null.
#[no_mangle]
pub unsafe extern "C" fn sq_graph_stats(
    g: *const SqGraph,
    vertices: *mut usize,
    edges: *mut usize,
    max_degree: *mut usize,
) -> SqStatus {
    guard(|| {
        let g = try_status!(unsafe { graph_ref(g) });
        for (p, v) in [(vertices, g.n()), (edges, g.edge_count()), (max_degree, g.max_degree())] {
            if !p.is_null() {
                // SAFETY: non-null output pointer supplied by the caller.
                unsafe { *p = v };
            }
        }
        SqStatus::Ok
    })
}

/// New handle holding the square of `g`.
#[no_mangle]
pub unsafe extern "C" fn sq_graph_square(g: *const SqGraph, out: *mut *mut SqGraph) -> SqStatus {
    guard(|| {
        non_null!(out);
        let g = try_status!(unsafe { graph_ref(g) });
        unsafe { emit_graph(out, g.square()) }
    })
}

/// Exact maximum average degree as a reduced fraction.
#[no_mangle]
pub unsafe extern "C" fn sq_mad(g: *const SqGraph, numerator: *mut i64, denominator: *mut i64) -> SqStatus {
    guard(|| {
        non_null!(numerator, denominator);
        let g = try_status!(unsafe { graph_ref(g) });
        match mad(g).to_i64_pair() {
            Some((p, q)) => {
                // SAFETY: checked non-null above.
                unsafe {
                    *numerator = p;
                    *denominator = q;
                }
                SqStatus::Ok
            }
            None => fail(SqStatus::Overflow, "mad does not fit in 64-bit integers"),
        }
    })
}

/// Degeneracy of `g`.
#[no_mangle]
pub unsafe extern "C" fn sq_degeneracy(g: *const SqGraph, out: *mut usize) -> SqStatus {
    guard(|| {
        non_null!(out);
        let g = try_status!(unsafe { graph_ref(g) });
        unsafe { *out = degeneracy_ordering(g).0 };
        SqStatus::Ok
    })
}

/// Colours used by first-fit on the square along its degeneracy ordering.
/// `colors` may be null; otherwise it must have room for one entry per
/// vertex and receives the 1-based colours.
#[no_mangle]
pub unsafe extern "C" fn sq_square_color(g: *const SqGraph, colors_used: *mut usize, colors: *mut u32) -> SqStatus {
    guard(|| {
        non_null!(colors_used);
        let g = try_status!(unsafe { graph_ref(g) });
        let w = square_color_witness(g);
        unsafe { *colors_used = w.colors_used };
        if !colors.is_null() {
            // SAFETY: the caller provides room for `g.n()` entries.
            unsafe { ptr::copy_nonoverlapping(w.coloring.colors.as_ptr(), colors, g.n()) };
        }
        SqStatus::Ok
    })
}

/// Chromatic number of `g` (pass a squared handle for `χ(G²)`).
/// `max_nodes = 0` means no limit. When the search stops early the status
/// is `BudgetExhausted` and `lower <= χ <= upper`.
#[no_mangle]
pub unsafe extern "C" fn sq_exact_chromatic(
    g: *const SqGraph,
    max_nodes: u64,
    lower: *mut usize,
    upper: *mut usize,
) -> SqStatus {
    guard(|| {
        non_null!(lower, upper);
        let g = try_status!(unsafe { graph_ref(g) });
        let r = exact_chromatic(g, budget(max_nodes));
        unsafe {
            *lower = r.lower;
            *upper = r.upper;
        }
        if r.exact {
            SqStatus::Ok
        } else {
            fail(SqStatus::BudgetExhausted, format!("search stopped after {} nodes", r.nodes))
        }
    })
}

/// Size of a maximum clique; `BudgetExhausted` means only a lower bound.
#[no_mangle]
pub unsafe extern "C" fn sq_max_clique(g: *const SqGraph, max_nodes: u64, size: *mut usize) -> SqStatus {
    guard(|| {
        non_null!(size);
        let g = try_status!(unsafe { graph_ref(g) });
        let c = max_clique(g, budget(max_nodes));
        unsafe { *size = c.size };
        if c.exact {
            SqStatus::Ok
        } else {
            fail(SqStatus::BudgetExhausted, format!("search stopped after {} nodes", c.nodes))
        }
    })
}

fn emit_string(out: *mut *mut c_char, s: String) -> SqStatus {
    match CString::new(s) {
        Ok(c) => {
            // SAFETY: `out` was checked for null by the caller.
            unsafe { *out = c.into_raw() };
            SqStatus::Ok
        }
        Err(_) => fail(SqStatus::Internal, "string contains NUL"),
    }
}

/// Edge-list text of `g`. Free with `sq_string_free`.
#[no_mangle]
pub unsafe extern "C" fn sq_graph_to_edge_list(g: *const SqGraph, out: *mut *mut c_char) -> SqStatus {
    guard(|| {
        non_null!(out);
        let g = try_status!(unsafe { graph_ref(g) });
        emit_string(out, sqcolor::io::emit_edge_list(g))
    })
}

/// JSON summary of `g` (the `verify` report). `max_nodes` limits the
/// clique search in the square; 0 means no limit. Free with
/// `sq_string_free`.
#[no_mangle]
pub unsafe extern "C" fn sq_verify_json(g: *const SqGraph, max_nodes: u64, out: *mut *mut c_char) -> SqStatus {
    guard(|| {
        non_null!(out);
        let g = try_status!(unsafe { graph_ref(g) });
        emit_string(out, sqcolor::report::verify(g, budget(max_nodes)).to_json())
    })
}

/// Releases a string returned by this library; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn sq_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: `s` came from `CString::into_raw` in this library.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Colour bound for `G²` when `mad(G) < 2k`.
#[no_mangle]
pub extern "C" fn sq_ghost_chromatic_bound(k: u64, max_degree: u64) -> u64 {
    sqcolor::bounds::ghost_chromatic_bound(k, max_degree)
}
