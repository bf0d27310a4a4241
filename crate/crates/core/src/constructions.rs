// SPDX-License-Identifier: Apache-2.0

//! Deterministic generators for the extremal graphs, plus seeded random
//! sparse graphs for property testing.
//!
//! Every construction returns a [`ConstructionMeta`] listing named vertex
//! roles and the properties the graph is expected to have. The claims are
//! data only; [`check_claim`] recomputes each one from the graph.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::coloring::{exact_chromatic, is_clique, max_clique, Budget};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::{degeneracy_ordering, mad};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Origin {
    /// Stated in the literature for this graph.
    Published,
    /// Obtained by counting from the construction.
    Counted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "value")]
pub enum Claim {
    VertexCount(usize),
    EdgeCount(usize),
    MaxDegree(usize),
    Degeneracy(usize),
    Girth(usize),
    MadBelow(Rational),
    MadEquals(Rational),
    SquareComplete,
    SquareChromatic(usize),
    SquareCliqueAtLeast(usize),
    /// The vertices of the named role are pairwise within distance two.
    RoleCliqueInSquare(String),
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Claim::VertexCount(v) => write!(f, "vertices = {v}"),
            Claim::EdgeCount(v) => write!(f, "edges = {v}"),
            Claim::MaxDegree(v) => write!(f, "max_degree = {v}"),
            Claim::Degeneracy(v) => write!(f, "degeneracy = {v}"),
            Claim::Girth(v) => write!(f, "girth = {v}"),
            Claim::MadBelow(r) => write!(f, "mad < {r}"),
            Claim::MadEquals(r) => write!(f, "mad = {r}"),
            Claim::SquareComplete => write!(f, "square is complete"),
            Claim::SquareChromatic(v) => write!(f, "chi(square) = {v}"),
            Claim::SquareCliqueAtLeast(v) => write!(f, "clique(square) >= {v}"),
            Claim::RoleCliqueInSquare(r) => write!(f, "role '{r}' is a clique in the square"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimEntry {
    pub claim: Claim,
    pub origin: Origin,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionMeta {
    pub name: String,
    pub params: Vec<(String, String)>,
    pub claims: Vec<ClaimEntry>,
    pub roles: BTreeMap<String, Vec<usize>>,
}

impl ConstructionMeta {
    fn new(name: &str) -> Self {
        ConstructionMeta { name: name.to_string(), params: Vec::new(), claims: Vec::new(), roles: BTreeMap::new() }
    }

    fn param(mut self, k: &str, v: impl ToString) -> Self {
        self.params.push((k.to_string(), v.to_string()));
        self
    }

    fn claim(mut self, claim: Claim, origin: Origin) -> Self {
        self.claims.push(ClaimEntry { claim, origin });
        self
    }

    fn role(mut self, name: &str, vertices: impl IntoIterator<Item = usize>) -> Self {
        self.roles.insert(name.to_string(), vertices.into_iter().collect());
        self
    }

    /// `key: value` pairs for an edge-list comment header.
    pub fn header(&self) -> Vec<(String, String)> {
        let mut h = vec![("name".to_string(), self.name.clone())];
        h.extend(self.params.iter().map(|(k, v)| (format!("param.{k}"), v.clone())));
        for (i, c) in self.claims.iter().enumerate() {
            let origin = match c.origin {
                Origin::Published => "published",
                Origin::Counted => "counted",
            };
            h.push((format!("claim.{i}"), format!("{} ({origin})", c.claim)));
        }
        for (role, vs) in &self.roles {
            let list: Vec<String> = vs.iter().map(usize::to_string).collect();
            h.push((format!("role.{role}"), list.join(" ")));
        }
        h
    }
}

/// Result of recomputing a claim. `holds` is `None` when a budgeted search
/// could not decide it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimCheck {
    pub claim: Claim,
    pub holds: Option<bool>,
    pub observed: String,
}

pub fn girth(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for s in 0..g.n() {
        let mut dist = vec![usize::MAX; g.n()];
        let mut parent = vec![usize::MAX; g.n()];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let cycle = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(cycle, |b| b.min(cycle)));
                }
            }
        }
    }
    best
}

pub fn check_claim(g: &Graph, meta: &ConstructionMeta, claim: &Claim, budget: Budget) -> ClaimCheck {
    let (holds, observed) = match claim {
        Claim::VertexCount(v) => (Some(g.n() == *v), g.n().to_string()),
        Claim::EdgeCount(v) => (Some(g.edge_count() == *v), g.edge_count().to_string()),
        Claim::MaxDegree(v) => (Some(g.max_degree() == *v), g.max_degree().to_string()),
        Claim::Degeneracy(v) => {
            let d = degeneracy_ordering(g).0;
            (Some(d == *v), d.to_string())
        }
        Claim::Girth(v) => {
            let gi = girth(g);
            (Some(gi == Some(*v)), format!("{gi:?}"))
        }
        Claim::MadBelow(r) => {
            let m = mad(g);
            (Some(&m < r), m.to_string())
        }
        Claim::MadEquals(r) => {
            let m = mad(g);
            (Some(&m == r), m.to_string())
        }
        Claim::SquareComplete => {
            let sq = g.square();
            (Some(sq.is_complete()), format!("{} of {} pairs", sq.edge_count(), g.n() * g.n().saturating_sub(1) / 2))
        }
        Claim::SquareChromatic(v) => {
            let r = exact_chromatic(&g.square(), budget);
            match r.chi() {
                Some(chi) => (Some(chi == *v), chi.to_string()),
                // Decided anyway if the claimed value falls outside the interval.
                None => {
                    let decided = (*v < r.lower || *v > r.upper).then_some(false);
                    (decided, format!("[{}, {}]", r.lower, r.upper))
                }
            }
        }
        Claim::SquareCliqueAtLeast(v) => {
            let c = max_clique(&g.square(), budget);
            let holds = if c.size >= *v {
                Some(true)
            } else if c.exact {
                Some(false)
            } else {
                None
            };
            (holds, c.size.to_string())
        }
        Claim::RoleCliqueInSquare(role) => match meta.roles.get(role) {
            Some(vs) => (Some(is_clique(&g.square(), vs)), format!("{} vertices", vs.len())),
            None => (Some(false), format!("no role '{role}'")),
        },
    };
    ClaimCheck { claim: claim.clone(), holds, observed }
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("valid clique")
}

/// `K_{1,leaves}` with centre `0`.
pub fn star(leaves: usize) -> Graph {
    Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("valid star")
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).expect("valid K_ab")
}

/// Circulant graph: `i ~ i ± o (mod n)` for each offset `o`.
pub fn circulant(n: usize, offsets: &[usize]) -> Result<Graph> {
    let mut edges = Vec::new();
    for &o in offsets {
        if o == 0 || o >= n {
            return Err(Error::InvalidParameter(format!("offset {o} invalid for n = {n}")));
        }
        edges.extend((0..n).map(|i| (i, (i + o) % n)));
    }
    Graph::new(n, edges)
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i ~ i+5`.
pub fn petersen() -> Graph {
    let mut e: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    e.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
    e.extend((0..5).map(|i| (i, i + 5)));
    Graph::new(10, e).expect("valid Petersen graph")
}

/// The 13-vertex graph with maximum degree 4 whose square is `K13`.
///
/// Labels: `0` is the centre `v0`; `1..=8` the outer cycle `v1..v8`;
/// `9..=12` the midpoints of the subdivided diagonals `v1v4`, `v2v7`,
/// `v3v6`, `v5v8`.
pub fn figure2() -> Graph {
    let mut e: Vec<(usize, usize)> = (1..=8).map(|i| (i, i % 8 + 1)).collect();
    e.extend([(1, 6), (2, 5), (3, 8), (4, 7)]);
    for (mid, (a, b)) in [(9, (1, 4)), (10, (2, 7)), (11, (3, 6)), (12, (5, 8))] {
        e.extend([(a, mid), (mid, b), (0, mid)]);
    }
    Graph::new(13, e).expect("valid figure-2 graph")
}

/// The 20-vertex graph with maximum degree 5 built from a Petersen graph
/// plus five degree-5 vertices `x1..x5` joined through a subdivided
/// pentagram.
///
/// Labels: `0..5` are `v1..v5` (inner 5-cycle), `5..10` are `w1..w5`
/// (outer pentagram `w1w3w5w2w4`, spoke `vi wi`), `10..14` are `x2..x5`,
/// `14..17` are the midpoints of `x4x2`, `x2x5`, `x5x3`, and the last three
/// are the removable part: `17` is `x1`, `18` the midpoint of `x3x1`, `19`
/// the midpoint of `x1x4`. Each `xi` is adjacent to `w(i-1)`, `wi` and
/// `v(i+2)`, indices cyclic.
pub fn figure3_full() -> Graph {
    let v = |i: usize| (i - 1) % 5;
    let w = |i: usize| 5 + (i - 1) % 5;
    let x = |i: usize| if i == 1 { 17 } else { 10 + i - 2 };
    let mut e: Vec<(usize, usize)> = (1..=5).map(|i| (v(i), v(i % 5 + 1))).collect();
    for (a, b) in [(1, 3), (3, 5), (5, 2), (2, 4), (4, 1)] {
        e.push((w(a), w(b)));
    }
    e.extend((1..=5).map(|i| (v(i), w(i))));
    for i in 1..=5 {
        let prev = if i == 1 { 5 } else { i - 1 };
        let vi = (i + 2 - 1) % 5 + 1;
        e.extend([(x(i), w(prev)), (x(i), w(i)), (x(i), v(vi))]);
    }
    for (mid, (a, b)) in [(14, (4, 2)), (15, (2, 5)), (16, (5, 3)), (18, (3, 1)), (19, (1, 4))] {
        e.extend([(x(a), mid), (mid, x(b))]);
    }
    Graph::new(20, e).expect("valid figure-3 graph")
}

/// [`figure3_full`] without `x1` and the midpoints of `x3x1` and `x1x4`:
/// the induced subgraph on the first 17 labels.
pub fn figure3_reduced() -> Graph {
    figure3_full().induced(&(0..17).collect::<Vec<_>>()).expect("prefix of labels")
}

/// `K_n` with every edge `e` blown up into `K_{2,t}` (new group `V_e`) and
/// a path of length two between every pair in `V_e × V_f` for each pair of
/// disjoint edges `e, f`.
///
/// Labels: hubs `0..n`; groups in lexicographic edge order, group `j`
/// occupying `n + j t .. n + (j+1) t`; then the path midpoints.
pub fn g_family(n: usize, t: usize) -> Result<(Graph, ConstructionMeta)> {
    if n < 4 || t < 2 {
        return Err(Error::InvalidParameter(format!("g_family needs n >= 4 and t >= 2, got n = {n}, t = {t}")));
    }
    let hub_edges: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let m = hub_edges.len();
    let group = |j: usize| (n + j * t)..(n + (j + 1) * t);
    let mut edges = Vec::new();
    for (j, &(a, b)) in hub_edges.iter().enumerate() {
        for x in group(j) {
            edges.extend([(a, x), (b, x)]);
        }
    }
    let mut next = n + m * t;
    let mut disjoint_pairs = 0;
    for i in 0..m {
        for j in i + 1..m {
            let (e, f) = (hub_edges[i], hub_edges[j]);
            if e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1 {
                continue;
            }
            disjoint_pairs += 1;
            for x in group(i) {
                for y in group(j) {
                    edges.extend([(x, next), (next, y)]);
                    next += 1;
                }
            }
        }
    }
    let g = Graph::new(next, edges)?;

    let groups_end = n + m * t;
    let max_degree = ((n - 1) * t).max(2 + t * (m + 3 - 2 * n));
    let degree_origin = if n == 5 { Origin::Published } else { Origin::Counted };
    let mut meta = ConstructionMeta::new("g_family")
        .param("n", n)
        .param("t", t)
        .claim(Claim::VertexCount(n + m * t + disjoint_pairs * t * t), Origin::Counted)
        .claim(Claim::EdgeCount(2 * m * t + 2 * disjoint_pairs * t * t), Origin::Counted)
        .claim(Claim::MaxDegree(max_degree), degree_origin)
        .claim(Claim::Degeneracy(2), Origin::Published)
        .claim(Claim::MadBelow(Rational::from_int(4)), Origin::Published)
        .claim(Claim::RoleCliqueInSquare("groups".into()), Origin::Published)
        .claim(Claim::SquareCliqueAtLeast(t * m), Origin::Published)
        .role("hubs", 0..n)
        .role("groups", n..groups_end)
        .role("midpoints", groups_end..next);
    for (j, &(a, b)) in hub_edges.iter().enumerate() {
        meta = meta.role(&format!("group.{a}-{b}"), group(j));
    }
    Ok((g, meta))
}

/// Graphs addressable by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedGraph {
    Path(usize),
    Cycle(usize),
    Petersen,
    Figure2,
    Figure3Full,
    Figure3Reduced,
}

impl FromStr for NamedGraph {
    type Err = Error;

    /// Accepts `petersen`, `figure2`, `figure3_full`, `figure3_reduced`,
    /// `path(N)` and `cycle(N)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let unknown = || Error::UnknownConstruction(s.to_string());
        let sized = |prefix: &str| -> Option<Result<usize>> {
            let inner = s.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?;
            Some(inner.trim().parse().map_err(|_| unknown()))
        };
        if let Some(n) = sized("path") {
            return Ok(NamedGraph::Path(n?));
        }
        if let Some(n) = sized("cycle") {
            return Ok(NamedGraph::Cycle(n?));
        }
        match s {
            "petersen" => Ok(NamedGraph::Petersen),
            "figure2" => Ok(NamedGraph::Figure2),
            "figure3_full" => Ok(NamedGraph::Figure3Full),
            "figure3_reduced" => Ok(NamedGraph::Figure3Reduced),
            _ => Err(unknown()),
        }
    }
}

pub fn named_graph(name: &str) -> Result<(Graph, ConstructionMeta)> {
    build_named(name.parse()?)
}

pub fn build_named(which: NamedGraph) -> Result<(Graph, ConstructionMeta)> {
    use Origin::{Counted, Published};
    let four = || Rational::from_int(4);
    Ok(match which {
        NamedGraph::Path(n) => {
            if n == 0 {
                return Err(Error::InvalidParameter("path needs n >= 1".into()));
            }
            let meta = ConstructionMeta::new("path")
                .param("n", n)
                .claim(Claim::VertexCount(n), Counted)
                .claim(Claim::EdgeCount(n - 1), Counted)
                .claim(Claim::MaxDegree((n - 1).min(2)), Counted);
            (path(n), meta)
        }
        NamedGraph::Cycle(n) => {
            let g = cycle(n)?;
            let mut meta = ConstructionMeta::new("cycle")
                .param("n", n)
                .claim(Claim::VertexCount(n), Counted)
                .claim(Claim::EdgeCount(n), Counted)
                .claim(Claim::MaxDegree(2), Counted)
                .claim(Claim::Degeneracy(2), Counted);
            if n == 5 {
                meta = meta.claim(Claim::SquareComplete, Published).claim(Claim::SquareChromatic(5), Published);
            }
            (g, meta)
        }
        NamedGraph::Petersen => {
            let meta = ConstructionMeta::new("petersen")
                .claim(Claim::VertexCount(10), Counted)
                .claim(Claim::EdgeCount(15), Counted)
                .claim(Claim::MaxDegree(3), Published)
                .claim(Claim::Girth(5), Counted)
                .claim(Claim::MadBelow(four()), Published)
                .claim(Claim::SquareComplete, Published)
                .claim(Claim::SquareChromatic(10), Published)
                .role("outer", 0..5)
                .role("inner", 5..10);
            (petersen(), meta)
        }
        NamedGraph::Figure2 => {
            let meta = ConstructionMeta::new("figure2")
                .claim(Claim::VertexCount(13), Counted)
                .claim(Claim::EdgeCount(24), Counted)
                .claim(Claim::MaxDegree(4), Published)
                .claim(Claim::MadBelow(four()), Published)
                .claim(Claim::MadEquals(Rational::new(48, 13)), Counted)
                .claim(Claim::SquareComplete, Published)
                .claim(Claim::SquareChromatic(13), Published)
                .role("center", [0])
                .role("cycle", 1..9)
                .role("midpoints", 9..13);
            (figure2(), meta)
        }
        NamedGraph::Figure3Full => {
            let meta = ConstructionMeta::new("figure3_full")
                .claim(Claim::VertexCount(20), Counted)
                .claim(Claim::EdgeCount(40), Counted)
                .claim(Claim::MaxDegree(5), Published)
                .claim(Claim::MadEquals(four()), Published)
                .claim(Claim::RoleCliqueInSquare("black_and_red".into()), Published)
                .claim(Claim::SquareCliqueAtLeast(15), Published)
                .role("v", 0..5)
                .role("w", 5..10)
                .role("x", [17, 10, 11, 12, 13])
                .role("midpoints", [14, 15, 16, 18, 19])
                .role("red", [17, 18, 19])
                .role("black_and_red", (0..14).chain([17]));
            (figure3_full(), meta)
        }
        NamedGraph::Figure3Reduced => {
            let meta = ConstructionMeta::new("figure3_reduced")
                .claim(Claim::VertexCount(17), Counted)
                .claim(Claim::EdgeCount(33), Counted)
                .claim(Claim::MaxDegree(5), Published)
                .claim(Claim::MadBelow(four()), Published)
                .claim(Claim::SquareChromatic(14), Published)
                .role("v", 0..5)
                .role("w", 5..10)
                .role("x", 10..14)
                .role("midpoints", 14..17);
            (figure3_reduced(), meta)
        }
    })
}

/// Seeded random `back`-degenerate graph.
///
/// Algorithm (ChaCha8 seeded with `seed` via `seed_from_u64`): vertices are
/// added in index order; vertex `v` collects the earlier vertices whose
/// degree is below `degree_cap`, then picks `min(back, count)` of them by a
/// partial Fisher–Yates shuffle (`gen_range(i..len)` for `i = 0, 1, ...`)
/// and joins to each. Every vertex has at most `back` earlier neighbours,
/// so the graph is `back`-degenerate.
pub fn random_degenerate(nv: usize, back: usize, degree_cap: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut degree = vec![0usize; nv];
    let mut edges = Vec::new();
    let mut eligible = Vec::new();
    for v in 0..nv {
        eligible.clear();
        eligible.extend((0..v).filter(|&u| degree[u] < degree_cap));
        let picks = back.min(eligible.len());
        for i in 0..picks {
            let j = rng.gen_range(i..eligible.len());
            eligible.swap(i, j);
            let u = eligible[i];
            edges.push((u, v));
            degree[u] += 1;
            degree[v] += 1;
        }
    }
    Graph::new(nv, edges).expect("generated edges are valid")
}

/// [`random_degenerate`] with two back edges per vertex; such graphs have
/// `mad < 4`.
pub fn random_two_degenerate(nv: usize, degree_cap: usize, seed: u64) -> Result<Graph> {
    if nv < 3 || degree_cap < 2 {
        return Err(Error::InvalidParameter(format!(
            "random_two_degenerate needs nv >= 3 and degree_cap >= 2, got {nv}, {degree_cap}"
        )));
    }
    Ok(random_degenerate(nv, 2, degree_cap, seed))
}

/// [`random_two_degenerate`] with metadata for the edge-list header.
pub fn random_two_degenerate_construction(
    nv: usize,
    degree_cap: usize,
    seed: u64,
) -> Result<(Graph, ConstructionMeta)> {
    let g = random_two_degenerate(nv, degree_cap, seed)?;
    let meta = ConstructionMeta::new("random_two_degenerate")
        .param("nv", nv)
        .param("degree_cap", degree_cap)
        .param("seed", seed)
        .claim(Claim::VertexCount(nv), Origin::Counted)
        .claim(Claim::MadBelow(Rational::from_int(4)), Origin::Counted);
    Ok((g, meta))
}

/// Seeded `G(n, p)` with `p = num/den`: pairs `(u, v)`, `u < v`, in
/// lexicographic order, each kept when `gen_range(0..den) < num`.
pub fn random_gnp(n: usize, num: u64, den: u64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_range(0..den) < num {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("generated edges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_basics() {
        let (g, _) = named_graph("petersen").unwrap();
        assert_eq!((g.n(), g.edge_count(), g.max_degree()), (10, 15, 3));
        assert!((0..10).all(|v| g.degree(v) == 3));
        assert_eq!(girth(&g), Some(5));
    }

    #[test]
    fn figure2_basics() {
        let g = figure2();
        assert_eq!((g.n(), g.edge_count(), g.max_degree()), (13, 24, 4));
        assert_eq!(g.neighbors(1), &[2, 6, 8, 9]);
    }

    #[test]
    fn figure3_basics() {
        let full = figure3_full();
        assert_eq!((full.n(), full.edge_count(), full.max_degree()), (20, 40, 5));
        let reduced = figure3_reduced();
        assert_eq!((reduced.n(), reduced.edge_count(), reduced.max_degree()), (17, 33, 5));
        // x1 sees w5, w1, v3 and two midpoints.
        assert_eq!(full.neighbors(17), &[2, 5, 9, 18, 19]);
    }

    #[test]
    fn named_graph_parsing() {
        assert_eq!("path(4)".parse::<NamedGraph>().unwrap(), NamedGraph::Path(4));
        assert_eq!("cycle( 7 )".parse::<NamedGraph>().unwrap(), NamedGraph::Cycle(7));
        assert!(matches!(named_graph("hexagon"), Err(Error::UnknownConstruction(_))));
        assert!(named_graph("cycle(x)").is_err());
        assert!(named_graph("cycle(2)").is_err());
        assert_eq!(named_graph("path(1)").unwrap().0.n(), 1);
    }

    #[test]
    fn g_family_counts() {
        let (g, meta) = g_family(5, 2).unwrap();
        assert_eq!((g.n(), g.edge_count(), g.max_degree()), (85, 160, 8));
        assert_eq!(meta.roles["groups"].len(), 20);
        let (g, _) = g_family(5, 3).unwrap();
        assert_eq!(g.max_degree(), 12);
        let (_, meta) = g_family(7, 2).unwrap();
        assert!(meta.claims.iter().any(|c| c.claim == Claim::SquareCliqueAtLeast(42)));
        assert!(g_family(3, 2).is_err());
        assert!(g_family(5, 1).is_err());
    }

    #[test]
    fn random_two_degenerate_small() {
        for seed in 0..20 {
            let g = random_two_degenerate(3, 8, seed).unwrap();
            assert_eq!(g.n(), 3);
            assert!(g.edge_count() <= 3);
        }
        assert!(random_two_degenerate(2, 8, 0).is_err());
        assert!(random_two_degenerate(5, 1, 0).is_err());
    }

    #[test]
    fn random_generators_are_reproducible() {
        assert_eq!(random_two_degenerate(200, 10, 1).unwrap(), random_two_degenerate(200, 10, 1).unwrap());
        assert_ne!(random_two_degenerate(200, 10, 1).unwrap(), random_two_degenerate(200, 10, 2).unwrap());
        assert_eq!(random_gnp(30, 1, 3, 9), random_gnp(30, 1, 3, 9));
    }

    #[test]
    fn cap_is_respected() {
        let g = random_degenerate(300, 2, 6, 5);
        // A vertex may exceed the cap only through its own back edges.
        assert!(g.max_degree() <= 6 + 2);
    }

    #[test]
    fn header_lists_claims_and_roles() {
        let (_, meta) = named_graph("figure2").unwrap();
        let h = meta.header();
        assert_eq!(h[0], ("name".to_string(), "figure2".to_string()));
        assert!(h.iter().any(|(k, v)| k == "role.center" && v == "0"));
        assert!(h.iter().any(|(_, v)| v == "mad = 48/13 (counted)"));
    }
}
