// SPDX-License-Identifier: Apache-2.0

//! Brute-force oracles and sample generators shared by the integration
//! tests. Nothing here calls the algorithms under test.

#![allow(dead_code)]

use std::collections::VecDeque;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sqcolor::{Graph, Rational};

/// Maximum of `|E(S)| / |S|` over all nonempty vertex subsets.
pub fn brute_density(g: &Graph) -> Rational {
    let n = g.n();
    assert!(n <= 20, "oracle is exponential");
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut best = Rational::zero();
    for mask in 1u32..(1u32 << n) {
        let inside = edges.iter().filter(|&&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1).count();
        let d = Rational::new(inside as i64, mask.count_ones() as i64);
        if d > best {
            best = d;
        }
    }
    best
}

/// `2 * brute_density`.
pub fn brute_mad(g: &Graph) -> Rational {
    Rational::from_int(2) * brute_density(g)
}

fn colorable(adj: &[Vec<usize>], k: usize, colors: &mut Vec<usize>, v: usize) -> bool {
    if v == adj.len() {
        return true;
    }
    // Symmetry breaking: vertex v may open at most one new colour.
    let opened = colors[..v].iter().copied().max().map_or(0, |m| m + 1);
    for c in 0..k.min(opened + 1) {
        if adj[v].iter().all(|&w| w >= v || colors[w] != c) {
            colors[v] = c;
            if colorable(adj, k, colors, v + 1) {
                return true;
            }
        }
    }
    colors[v] = usize::MAX;
    false
}

/// Smallest `k` admitting a proper `k`-colouring, by exhaustive search.
pub fn brute_chromatic(g: &Graph) -> usize {
    let n = g.n();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    (0..=n).find(|&k| colorable(&adj, k, &mut vec![usize::MAX; n], 0)).expect("n colours always suffice")
}

/// Largest clique, by checking all subsets.
pub fn brute_clique(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 20);
    (0u32..(1 << n))
        .filter(|&mask| {
            (0..n).all(|u| mask >> u & 1 == 0 || (u + 1..n).all(|v| mask >> v & 1 == 0 || g.has_edge(u, v)))
        })
        .map(u32::count_ones)
        .max()
        .unwrap_or(0) as usize
}

pub fn bfs_distances(g: &Graph, s: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[s] = 0;
    let mut q = VecDeque::from([s]);
    while let Some(u) = q.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                q.push_back(w);
            }
        }
    }
    dist
}

/// Square computed from all-pairs BFS distances.
pub fn bfs_square(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges = Vec::new();
    for u in 0..n {
        let d = bfs_distances(g, u);
        edges.extend((u + 1..n).filter(|&v| d[v] <= 2).map(|v| (u, v)));
    }
    Graph::new(n, edges).unwrap()
}

/// Uniform `G(n, p)` with `p` given as a float, from a caller-owned RNG.
pub fn gnp(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

pub fn is_connected(g: &Graph) -> bool {
    g.n() == 0 || bfs_distances(g, 0).iter().all(|&d| d != usize::MAX)
}

/// Connected random graphs on `1..=max_n` vertices with varied density,
/// reproducible from `seed`.
pub fn connected_sample(seed: u64, count: usize, max_n: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(1..=max_n);
        let p = rng.gen_range(0.15..0.9);
        let g = gnp(&mut rng, n, p);
        if is_connected(&g) {
            out.push(g);
        }
    }
    out
}

/// Sum of `d(v) - c` over all vertices, i.e. `2|E| - c|V|`.
pub fn charge_total(g: &Graph, c: i64) -> Rational {
    Rational::from_int(2 * g.edge_count() as i64 - c * g.n() as i64)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
