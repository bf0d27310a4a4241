// SPDX-License-Identifier: Apache-2.0

//! Maximum clique by branch and bound with a greedy-colouring bound.

use serde::Serialize;

use super::bitset::Bitset;
use super::{Budget, Meter};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueCertificate {
    /// Sorted ascending.
    pub vertices: Vec<usize>,
    pub size: usize,
    /// False when the budget ran out before optimality was proved.
    pub exact: bool,
    pub nodes: u64,
}

impl CliqueCertificate {
    pub fn verify(&self, g: &Graph) -> bool {
        self.size == self.vertices.len() && is_clique(g, &self.vertices)
    }
}

pub fn is_clique(g: &Graph, vertices: &[usize]) -> bool {
    vertices
        .iter()
        .enumerate()
        .all(|(i, &u)| u < g.n() && vertices[i + 1..].iter().all(|&v| u != v && g.has_edge(u, v)))
}

struct Search<'a> {
    adj: &'a [Bitset],
    best: Vec<usize>,
    meter: Meter,
}

impl Search<'_> {
    /// Orders `p` by greedy colour classes; returns vertices with their
    /// colour numbers, nondecreasing.
    fn color_sort(&self, p: &Bitset) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(p.count());
        let mut uncolored = p.clone();
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut q = uncolored.clone();
            while let Some(v) = q.first() {
                q.remove(v);
                uncolored.remove(v);
                q.difference_with(&self.adj[v]);
                out.push((v, color));
            }
        }
        out
    }

    fn expand(&mut self, r: &mut Vec<usize>, mut p: Bitset) {
        if !self.meter.tick() {
            return;
        }
        let order = self.color_sort(&p);
        for &(v, bound) in order.iter().rev() {
            if r.len() + bound <= self.best.len() || self.meter.exhausted {
                return;
            }
            r.push(v);
            let np = p.intersection(&self.adj[v]);
            if np.is_empty() {
                if r.len() > self.best.len() {
                    self.best = r.clone();
                }
            } else {
                self.expand(r, np);
            }
            r.pop();
            p.remove(v);
        }
    }
}

/// A maximum clique of `g`. If the budget runs out, the largest clique
/// found so far is returned with `exact == false`.
pub fn max_clique(g: &Graph, budget: Budget) -> CliqueCertificate {
    let n = g.n();
    // Search in a relabelled space where high-degree vertices come first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let adj: Vec<Bitset> = order
        .iter()
        .map(|&v| {
            let mut b = Bitset::new(n);
            for &w in g.neighbors(v) {
                b.insert(pos[w]);
            }
            b
        })
        .collect();

    let mut seed = Vec::new();
    for (i, row) in adj.iter().enumerate() {
        if seed.iter().all(|&j: &usize| row.contains(j)) {
            seed.push(i);
        }
    }

    let mut search = Search { adj: &adj, best: seed, meter: Meter::new(budget) };
    let mut all = Bitset::new(n);
    for i in 0..n {
        all.insert(i);
    }
    if n > 0 {
        search.expand(&mut Vec::new(), all);
    }
    let mut vertices: Vec<usize> = search.best.iter().map(|&i| order[i]).collect();
    vertices.sort_unstable();
    CliqueCertificate { size: vertices.len(), vertices, exact: !search.meter.exhausted, nodes: search.meter.nodes }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        let mut e: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        e.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        e.extend((0..5).map(|i| (i, i + 5)));
        Graph::new(10, e).unwrap()
    }

    #[test]
    fn petersen_is_triangle_free() {
        let c = max_clique(&petersen(), Budget::unlimited());
        assert_eq!(c.size, 2);
        assert!(c.exact && c.verify(&petersen()));
    }

    #[test]
    fn k33_bipartite() {
        let g = Graph::new(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v)))).unwrap();
        assert_eq!(max_clique(&g, Budget::unlimited()).size, 2);
    }

    #[test]
    fn complete_and_empty() {
        let k6 = Graph::new(6, (0..6).flat_map(|u| (u + 1..6).map(move |v| (u, v)))).unwrap();
        assert_eq!(max_clique(&k6, Budget::unlimited()).vertices, vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(max_clique(&Graph::empty(3), Budget::unlimited()).size, 1);
        assert_eq!(max_clique(&Graph::empty(0), Budget::unlimited()).size, 0);
    }

    #[test]
    fn exhausted_budget_still_returns_a_clique() {
        let c = max_clique(&petersen().square(), Budget::nodes(0));
        assert!(!c.exact);
        assert!(c.verify(&petersen().square()));
    }
}
