// SPDX-License-Identifier: Apache-2.0

//! Maximum average degree, degeneracy orderings and ordering checks.
//!
//! The densest subgraph is found exactly: a binary search over candidate
//! densities, each candidate `p/q` decided by a minimum cut in a network
//! whose capacities are scaled by `q`. The search stops once the interval
//! `(lo, hi]` is shorter than `1/n²`, which is less than the gap between
//! any two distinct fractions with denominators at most `n`.

use std::collections::BTreeSet;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::graph::Graph;
use crate::rational::Rational;

/// Maximum `|E(H)| / |V(H)|` together with a vertex set achieving it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DensestResult {
    pub density: Rational,
    pub witness: Vec<usize>,
}

impl DensestResult {
    pub fn mad(&self) -> Rational {
        Rational::from_int(2) * &self.density
    }
}

fn density_of(g: &Graph, set: &[usize]) -> Rational {
    Rational::new(g.edges_within(set) as i64, set.len() as i64)
}

/// Looks for a vertex set of density strictly above `p/q`.
///
/// Network: `s -> v` with capacity `m q`, `v -> t` with capacity
/// `m q + 2p - d(v) q`, and both orientations of every edge with capacity
/// `q`. A cut with source side `S` costs `m q n + 2 (p|S| - q|E(S)|)`.
fn denser_than(g: &Graph, p: i64, q: i64) -> Option<Vec<usize>> {
    let n = g.n();
    let m = g.edge_count() as i64;
    let (s, t) = (n, n + 1);
    let mut net = FlowNetwork::new(n + 2);
    for v in 0..n {
        net.add_arc(s, v, m * q);
        net.add_arc(v, t, m * q + 2 * p - g.degree(v) as i64 * q);
    }
    for (u, v) in g.edges() {
        net.add_arc(u, v, q);
        net.add_arc(v, u, q);
    }
    let cut = net.max_flow(s, t);
    if cut >= m * q * n as i64 {
        return None;
    }
    let side = net.source_side(s);
    let set: Vec<usize> = (0..n).filter(|&v| side[v]).collect();
    debug_assert!(!set.is_empty());
    Some(set)
}

fn to_i64(r: &Rational) -> (i64, i64) {
    r.to_i64_pair().expect("candidate density fits in i64")
}

/// Exact densest subgraph.
///
/// Edgeless graphs report density `0/1` with the single vertex `0` as
/// witness; the graph on zero vertices reports an empty witness.
pub fn densest_subgraph(g: &Graph) -> DensestResult {
    let n = g.n();
    if n == 0 {
        return DensestResult { density: Rational::zero(), witness: Vec::new() };
    }
    if g.edge_count() == 0 {
        return DensestResult { density: Rational::zero(), witness: vec![0] };
    }
    let mut witness: Vec<usize> = (0..n).collect();
    let mut lo = density_of(g, &witness);
    // No subgraph is denser than half the maximum degree.
    let mut hi = Rational::new(g.max_degree() as i64, 2);
    let n2 = (n * n) as i64;
    let gap = Rational::new(1, n2);
    let grid = 2 * n2;
    while &hi - &lo >= gap {
        // A grid point of spacing 1/(2n²) strictly inside (lo, hi).
        let mid = (&lo + &hi) / Rational::from_int(2);
        let scaled = (mid * Rational::from_int(grid)).floor();
        let mid = Rational::new(scaled.to_i64().expect("grid index fits in i64"), grid);
        debug_assert!(mid > lo && mid < hi);
        let (p, q) = to_i64(&mid);
        match denser_than(g, p, q) {
            Some(set) => {
                lo = density_of(g, &set);
                witness = set;
            }
            None => hi = mid,
        }
    }
    DensestResult { density: lo, witness }
}

/// Maximum average degree, `2 * max |E(H)|/|V(H)|`.
pub fn mad(g: &Graph) -> Rational {
    densest_subgraph(g).mad()
}

/// A vertex sequence with, for each vertex, the number of its neighbours
/// placed before it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Ordering {
    pub sequence: Vec<usize>,
    /// Indexed by vertex, not by position.
    pub back_degree: Vec<usize>,
}

impl Ordering {
    /// Validates `sequence` as a permutation of `g`'s vertices and computes
    /// back degrees with respect to `g`.
    pub fn new(g: &Graph, sequence: Vec<usize>) -> Result<Ordering> {
        let position = positions(g.n(), &sequence)?;
        let back_degree =
            (0..g.n()).map(|v| g.neighbors(v).iter().filter(|&&w| position[w] < position[v]).count()).collect();
        Ok(Ordering { sequence, back_degree })
    }

    pub fn identity(g: &Graph) -> Ordering {
        Ordering::new(g, (0..g.n()).collect()).expect("identity is a permutation")
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    pub fn max_back_degree(&self) -> usize {
        self.back_degree.iter().copied().max().unwrap_or(0)
    }
}

fn positions(n: usize, sequence: &[usize]) -> Result<Vec<usize>> {
    let not_perm = |reason: String| Error::NotPermutation { n, reason };
    if sequence.len() != n {
        return Err(not_perm(format!("length {} != {n}", sequence.len())));
    }
    let mut position = vec![usize::MAX; n];
    for (i, &v) in sequence.iter().enumerate() {
        if v >= n {
            return Err(not_perm(format!("entry {v} out of range")));
        }
        if position[v] != usize::MAX {
            return Err(not_perm(format!("vertex {v} repeated")));
        }
        position[v] = i;
    }
    Ok(position)
}

/// Smallest-last ordering: repeatedly removes a minimum-degree vertex
/// (smallest index on ties) and lists the removals in reverse.
pub fn degeneracy_ordering(g: &Graph) -> (usize, Ordering) {
    let n = g.n();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut queue: BTreeSet<(usize, usize)> = (0..n).map(|v| (degree[v], v)).collect();
    let mut removed = vec![false; n];
    let mut removal = Vec::with_capacity(n);
    let mut back_degree = vec![0; n];
    let mut degeneracy = 0;
    while let Some((d, v)) = queue.pop_first() {
        degeneracy = degeneracy.max(d);
        back_degree[v] = d;
        removed[v] = true;
        removal.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                queue.remove(&(degree[w], w));
                degree[w] -= 1;
                queue.insert((degree[w], w));
            }
        }
    }
    removal.reverse();
    (degeneracy, Ordering { sequence: removal, back_degree })
}

/// Whether every vertex has at most `d` neighbours before it in `ord`.
/// Back degrees are recomputed from `g`, not taken from `ord`.
pub fn verify_ordering(g: &Graph, ord: &Ordering, d: usize) -> Result<bool> {
    let fresh = Ordering::new(g, ord.sequence.clone())?;
    Ok(fresh.back_degree.iter().all(|&b| b <= d))
}
