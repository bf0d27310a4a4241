// SPDX-License-Identifier: Apache-2.0

//! Simple undirected graphs on dense vertex indices, the square operation
//! and degree statistics.

use serde::Serialize;

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are kept sorted and deduplicated; every graph value is
/// immutable once built.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse to a single edge.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Graph::from_raw(adj))
    }

    pub fn empty(n: usize) -> Graph {
        Graph { adj: vec![Vec::new(); n], edge_count: 0 }
    }

    /// Caller guarantees symmetry and absence of loops.
    fn from_raw(mut adj: Vec<Vec<usize>>) -> Graph {
        let mut twice = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        Graph { adj, edge_count: twice / 2 }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Subgraph induced by `vertices`, relabelled `0..vertices.len()` in the
    /// order given.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.n() {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n() });
            }
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| self.adj[v].iter().filter_map(|&w| (index[w] != usize::MAX).then_some(index[w])).collect())
            .collect();
        Ok(Graph::from_raw(adj))
    }

    /// Number of edges with both endpoints in `vertices`.
    pub fn edges_within(&self, vertices: &[usize]) -> usize {
        let mut inside = vec![false; self.n()];
        for &v in vertices {
            inside[v] = true;
        }
        vertices.iter().map(|&v| self.adj[v].iter().filter(|&&w| inside[w] && v < w).count()).sum()
    }

    /// The square: `uv` is an edge iff `u != v` and the distance between
    /// `u` and `v` is at most two.
    pub fn square(&self) -> Graph {
        let n = self.n();
        let mut mark = vec![usize::MAX; n];
        let adj = (0..n)
            .map(|u| {
                mark[u] = u;
                let mut list = Vec::new();
                for &w in &self.adj[u] {
                    if mark[w] != u {
                        mark[w] = u;
                        list.push(w);
                    }
                    for &x in &self.adj[w] {
                        if mark[x] != u {
                            mark[x] = u;
                            list.push(x);
                        }
                    }
                }
                list
            })
            .collect();
        Graph::from_raw(adj)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|l| l.len() + 1 == n)
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = std::collections::VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.distances_from(0).iter().all(Option::is_some)
    }
}

/// Builds a graph; free-function form of [`Graph::new`].
pub fn build_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    Graph::new(n, edges.iter().copied())
}

pub fn square(g: &Graph) -> Graph {
    g.square()
}

/// Degree of a vertex together with its numbers of degree-2 and degree-3
/// neighbours.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeEntry {
    pub d: usize,
    pub d2: usize,
    pub d3: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub entries: Vec<DegreeEntry>,
}

impl DegreeProfile {
    pub fn get(&self, v: usize) -> DegreeEntry {
        self.entries[v]
    }
}

pub fn degree_profile(g: &Graph) -> DegreeProfile {
    let entries = (0..g.n())
        .map(|v| {
            let mut e = DegreeEntry { d: g.degree(v), d2: 0, d3: 0 };
            for &w in g.neighbors(v) {
                match g.degree(w) {
                    2 => e.d2 += 1,
                    3 => e.d3 += 1,
                    _ => {}
                }
            }
            e
        })
        .collect();
    DegreeProfile { entries }
}

/// Per-vertex count of neighbours of degree at least `k + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BigDegreeMap {
    pub k: usize,
    pub counts: Vec<usize>,
}

impl BigDegreeMap {
    pub fn get(&self, v: usize) -> usize {
        self.counts[v]
    }
}

pub fn big_degree_count(g: &Graph, k: usize) -> BigDegreeMap {
    let counts = (0..g.n()).map(|v| g.neighbors(v).iter().filter(|&&w| g.degree(w) > k).count()).collect();
    BigDegreeMap { k, counts }
}
