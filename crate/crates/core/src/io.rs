// SPDX-License-Identifier: Apache-2.0

//! Text formats.
//!
//! Edge-list format: any number of `#` comment lines, then a header line
//! `n <count>`, then one edge per line as two whitespace-separated 0-based
//! vertex indices. Blank lines are ignored.
//!
//! DIMACS export: `p edge <n> <m>` followed by `m` lines `e <u> <v>` with
//! 1-based indices. [`parse_graph`] accepts both formats.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_index(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| parse_err(line, format!("expected a vertex index, found '{tok}'")))
}

/// Parses the edge-list format.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match n {
            None => {
                if toks.len() != 2 || toks[0] != "n" {
                    return Err(parse_err(line_no, format!("expected header 'n <count>', found '{line}'")));
                }
                n = Some(parse_index(toks[1], line_no)?);
            }
            Some(count) => {
                if toks[0] == "n" {
                    return Err(parse_err(line_no, "repeated 'n' header"));
                }
                if toks.len() != 2 {
                    return Err(parse_err(line_no, format!("expected 'u v', found '{line}'")));
                }
                let u = parse_index(toks[0], line_no)?;
                let v = parse_index(toks[1], line_no)?;
                for w in [u, v] {
                    if w >= count {
                        return Err(parse_err(line_no, format!("endpoint {w} out of range for n = {count}")));
                    }
                }
                if u == v {
                    return Err(parse_err(line_no, format!("loop edge at vertex {u}")));
                }
                edges.push((u, v));
            }
        }
    }
    let n = n.ok_or_else(|| parse_err(0, "missing 'n <count>' header"))?;
    Graph::new(n, edges)
}

/// Parses DIMACS `p edge` format (1-based, `c` comment lines).
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "p" => {
                if header.is_some() {
                    return Err(parse_err(line_no, "repeated 'p' line"));
                }
                if toks.len() != 4 || toks[1] != "edge" {
                    return Err(parse_err(line_no, format!("expected 'p edge n m', found '{line}'")));
                }
                header = Some((parse_index(toks[2], line_no)?, parse_index(toks[3], line_no)?));
            }
            "e" => {
                let (n, _) = header.ok_or_else(|| parse_err(line_no, "edge before 'p' line"))?;
                if toks.len() != 3 {
                    return Err(parse_err(line_no, format!("expected 'e u v', found '{line}'")));
                }
                let u = parse_index(toks[1], line_no)?;
                let v = parse_index(toks[2], line_no)?;
                for w in [u, v] {
                    if w == 0 || w > n {
                        return Err(parse_err(line_no, format!("endpoint {w} out of range 1..={n}")));
                    }
                }
                if u == v {
                    return Err(parse_err(line_no, format!("loop edge at vertex {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            other => return Err(parse_err(line_no, format!("unexpected token '{other}'"))),
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(0, "missing 'p edge' line"))?;
    if edges.len() != m {
        return Err(Error::HeaderMismatch { what: "edges", declared: m, found: edges.len() });
    }
    Graph::new(n, edges)
}

/// Parses either format, chosen by the first non-comment line.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#') && !l.starts_with('c'));
    match first {
        Some(l) if l.starts_with("p ") => parse_dimacs(text),
        _ => parse_edge_list(text),
    }
}

/// Collects `# key: value` comment lines preceding the header.
pub fn read_header(text: &str) -> BTreeMap<String, String> {
    text.lines()
        .map(str::trim)
        .take_while(|l| l.is_empty() || l.starts_with('#'))
        .filter_map(|l| l.trim_start_matches('#').split_once(':'))
        .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
        .collect()
}

pub fn emit_edge_list(g: &Graph) -> String {
    emit_edge_list_with_header(g, &[])
}

/// Edge-list text preceded by `# key: value` comment lines.
pub fn emit_edge_list_with_header(g: &Graph, header: &[(String, String)]) -> String {
    let mut out = String::new();
    for (k, v) in header {
        let _ = writeln!(out, "# {k}: {v}");
    }
    let _ = writeln!(out, "n {}", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn emit_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}
