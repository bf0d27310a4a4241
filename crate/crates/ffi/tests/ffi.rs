// SPDX-License-Identifier: Apache-2.0

use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

use sqcolor_ffi::*;

fn named(name: &str) -> *mut SqGraph {
    let name = CString::new(name).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { sq_graph_named(name.as_ptr(), &mut g) }, SqStatus::Ok);
    assert!(!g.is_null());
    g
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(sq_last_error()) }.to_str().unwrap().to_owned()
}

fn take_string(s: *mut c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { sq_string_free(s) };
    out
}

#[test]
fn petersen_square_is_k10() {
    let g = named("petersen");
    let (mut n, mut m, mut d) = (0, 0, 0);
    assert_eq!(unsafe { sq_graph_stats(g, &mut n, &mut m, &mut d) }, SqStatus::Ok);
    assert_eq!((n, m, d), (10, 15, 3));

    let mut s = ptr::null_mut();
    assert_eq!(unsafe { sq_graph_square(g, &mut s) }, SqStatus::Ok);
    assert_eq!(unsafe { sq_graph_stats(s, &mut n, &mut m, &mut d) }, SqStatus::Ok);
    assert_eq!((n, m, d), (10, 45, 9));

    let (mut lo, mut hi) = (0, 0);
    assert_eq!(unsafe { sq_exact_chromatic(s, 0, &mut lo, &mut hi) }, SqStatus::Ok);
    assert_eq!((lo, hi), (10, 10));
    unsafe {
        sq_graph_free(s);
        sq_graph_free(g);
    }
}

#[test]
fn build_from_edges_and_measure() {
    let edges: [usize; 10] = [0, 1, 1, 2, 2, 3, 3, 4, 4, 0];
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { sq_graph_new(5, edges.as_ptr(), 5, &mut g) }, SqStatus::Ok);

    let (mut num, mut den) = (0, 0);
    assert_eq!(unsafe { sq_mad(g, &mut num, &mut den) }, SqStatus::Ok);
    assert_eq!((num, den), (2, 1));

    let mut k = 0;
    assert_eq!(unsafe { sq_degeneracy(g, &mut k) }, SqStatus::Ok);
    assert_eq!(k, 2);

    let mut used = 0;
    let mut colors = [0u32; 5];
    assert_eq!(unsafe { sq_square_color(g, &mut used, colors.as_mut_ptr()) }, SqStatus::Ok);
    assert_eq!(used, 5);
    let mut sorted = colors;
    sorted.sort();
    assert_eq!(sorted, [1, 2, 3, 4, 5]);

    let mut clique = 0;
    assert_eq!(unsafe { sq_max_clique(g, 0, &mut clique) }, SqStatus::Ok);
    assert_eq!(clique, 2);

    let mut text = ptr::null_mut();
    assert_eq!(unsafe { sq_graph_to_edge_list(g, &mut text) }, SqStatus::Ok);
    assert_eq!(take_string(text), "n 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
    unsafe { sq_graph_free(g) };
}

#[test]
fn parse_and_verify_json() {
    let text = CString::new("# a triangle\nn 3\n0 1\n1 2\n0 2\n").unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { sq_graph_parse(text.as_ptr(), &mut g) }, SqStatus::Ok);
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { sq_verify_json(g, 0, &mut json) }, SqStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["graph"]["m"], 3);
    assert_eq!(v["mad"]["value"], "2/1");
    unsafe { sq_graph_free(g) };
}

#[test]
fn generators() {
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { sq_graph_g_family(5, 2, &mut g) }, SqStatus::Ok);
    let (mut n, mut m, mut d) = (0, 0, 0);
    unsafe { sq_graph_stats(g, &mut n, &mut m, &mut d) };
    assert_eq!((n, d), (85, 8));
    unsafe { sq_graph_free(g) };

    assert_eq!(unsafe { sq_graph_random_two_degenerate(80, 9, 7, &mut g) }, SqStatus::Ok);
    let mut k = 0;
    unsafe { sq_degeneracy(g, &mut k) };
    assert!(k <= 2);
    unsafe { sq_graph_free(g) };
}

#[test]
fn error_codes() {
    let mut g = ptr::null_mut();
    let bad = CString::new("n 2\n0 7\n").unwrap();
    assert_eq!(unsafe { sq_graph_parse(bad.as_ptr(), &mut g) }, SqStatus::ParseError);
    assert!(g.is_null());
    assert!(last_error().contains("out of range"), "{}", last_error());

    let name = CString::new("dodecahedron").unwrap();
    assert_eq!(unsafe { sq_graph_named(name.as_ptr(), &mut g) }, SqStatus::UnknownConstruction);

    let edges = [0usize, 0];
    assert_eq!(unsafe { sq_graph_new(2, edges.as_ptr(), 1, &mut g) }, SqStatus::InvalidArgument);
    assert_eq!(unsafe { sq_graph_g_family(3, 2, &mut g) }, SqStatus::InvalidArgument);

    assert_eq!(unsafe { sq_graph_parse(ptr::null(), &mut g) }, SqStatus::NullPointer);
    let mut k = 0;
    assert_eq!(unsafe { sq_degeneracy(ptr::null(), &mut k) }, SqStatus::NullPointer);

    let name = unsafe { CStr::from_ptr(sq_status_name(SqStatus::BudgetExhausted)) };
    assert_eq!(name.to_str().unwrap(), "budget exhausted");

    // Freeing null is a no-op.
    unsafe {
        sq_graph_free(ptr::null_mut());
        sq_string_free(ptr::null_mut());
    }
}

#[test]
fn budget_exhaustion_reports_bounds() {
    let edges: Vec<usize> = (0..7).flat_map(|v| [v, (v + 1) % 7]).collect();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { sq_graph_new(7, edges.as_ptr(), 7, &mut g) }, SqStatus::Ok);
    let mut s = ptr::null_mut();
    unsafe { sq_graph_square(g, &mut s) };
    let (mut lo, mut hi) = (0, 0);
    assert_eq!(unsafe { sq_exact_chromatic(s, 1, &mut lo, &mut hi) }, SqStatus::BudgetExhausted);
    assert!(lo <= 4 && 4 <= hi);
    assert_eq!(unsafe { sq_exact_chromatic(s, 0, &mut lo, &mut hi) }, SqStatus::Ok);
    assert_eq!((lo, hi), (4, 4));
    unsafe {
        sq_graph_free(s);
        sq_graph_free(g);
    }
}

#[test]
fn bound_value() {
    assert_eq!(sq_ghost_chromatic_bound(2, 30), 89);
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/sqcolor.h")).unwrap();
    let src = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/src/lib.rs")).unwrap();
    let exports: Vec<&str> =
        src.split("extern \"C\" fn ").skip(1).map(|rest| rest.split('(').next().unwrap()).collect();
    assert_eq!(exports.len(), 19);
    for name in exports {
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
    assert!(header.contains("typedef struct SqGraph SqGraph;"));
}
