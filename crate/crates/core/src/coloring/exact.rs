// SPDX-License-Identifier: Apache-2.0

//! Exact chromatic number by DSATUR branch and bound.
//!
//! The vertices of a large clique are precoloured `1..=ω` (any optimal
//! colouring can be permuted to agree), the upper bound starts from a plain
//! DSATUR colouring, and the search branches on the most saturated vertex,
//! breaking ties by degree and then by smallest index.

use serde::Serialize;

use super::clique::max_clique;
use super::{Budget, Coloring, Meter};
use crate::graph::Graph;

/// Budget spent on the initial clique bound.
const CLIQUE_NODES: u64 = 20_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChromaticResult {
    pub lower: usize,
    pub upper: usize,
    /// Proper colouring with `upper` colours.
    pub coloring: Coloring,
    pub exact: bool,
    pub nodes: u64,
}

impl ChromaticResult {
    pub fn chi(&self) -> Option<usize> {
        self.exact.then_some(self.upper)
    }
}

struct State<'a> {
    g: &'a Graph,
    colors: Vec<u32>,
    /// `sat_count[v][c]`: neighbours of `v` currently coloured `c`.
    sat_count: Vec<Vec<u32>>,
    saturation: Vec<usize>,
    uncolored: usize,
}

impl<'a> State<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        State { g, colors: vec![0; n], sat_count: vec![vec![0; n + 2]; n], saturation: vec![0; n], uncolored: n }
    }

    fn assign(&mut self, v: usize, c: u32) {
        self.colors[v] = c;
        self.uncolored -= 1;
        for &w in self.g.neighbors(v) {
            let slot = &mut self.sat_count[w][c as usize];
            if *slot == 0 {
                self.saturation[w] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colors[v] as usize;
        self.colors[v] = 0;
        self.uncolored += 1;
        for &w in self.g.neighbors(v) {
            let slot = &mut self.sat_count[w][c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    fn select(&self) -> Option<usize> {
        (0..self.g.n())
            .filter(|&v| self.colors[v] == 0)
            .max_by_key(|&v| (self.saturation[v], self.g.degree(v), std::cmp::Reverse(v)))
    }

    fn free(&self, v: usize, c: u32) -> bool {
        self.sat_count[v][c as usize] == 0
    }
}

struct Solver<'a> {
    state: State<'a>,
    lower: usize,
    best: usize,
    best_colors: Vec<u32>,
    meter: Meter,
}

impl Solver<'_> {
    fn search(&mut self, used: usize) {
        if !self.meter.tick() || self.best == self.lower {
            return;
        }
        let Some(v) = self.state.select() else {
            if used < self.best {
                self.best = used;
                self.best_colors = self.state.colors.clone();
            }
            return;
        };
        let limit = (used + 1).min(self.best - 1);
        for c in 1..=limit as u32 {
            if !self.state.free(v, c) {
                continue;
            }
            self.state.assign(v, c);
            self.search(used.max(c as usize));
            self.state.unassign(v);
            if self.meter.exhausted || self.best == self.lower {
                return;
            }
        }
    }
}

/// Colours the uncoloured vertices of `state` by plain DSATUR.
fn dsatur_complete(state: &mut State<'_>) -> usize {
    let mut used = state.colors.iter().copied().max().unwrap_or(0);
    while let Some(v) = state.select() {
        let c = (1..).find(|&c| state.free(v, c)).unwrap_or(1);
        state.assign(v, c);
        used = used.max(c);
    }
    used as usize
}

/// Exact chromatic number with a witness colouring, or an inexact
/// `[lower, upper]` interval if the budget runs out.
pub fn exact_chromatic(g: &Graph, budget: Budget) -> ChromaticResult {
    let n = g.n();
    if n == 0 {
        return ChromaticResult {
            lower: 0,
            upper: 0,
            coloring: Coloring::from_colors(Vec::new()),
            exact: true,
            nodes: 0,
        };
    }
    let clique = max_clique(g, Budget::nodes(CLIQUE_NODES));
    let mut state = State::new(g);
    for (i, &v) in clique.vertices.iter().enumerate() {
        state.assign(v, i as u32 + 1);
    }

    let mut greedy = State::new(g);
    for (i, &v) in clique.vertices.iter().enumerate() {
        greedy.assign(v, i as u32 + 1);
    }
    let upper = dsatur_complete(&mut greedy);

    let mut solver =
        Solver { state, lower: clique.size, best: upper, best_colors: greedy.colors, meter: Meter::new(budget) };
    if solver.best > solver.lower {
        solver.search(clique.size);
    }
    let exact = solver.best == solver.lower || !solver.meter.exhausted;
    let lower = if exact { solver.best } else { solver.lower };
    ChromaticResult {
        lower,
        upper: solver.best,
        coloring: Coloring::from_colors(solver.best_colors),
        exact,
        nodes: solver.meter.nodes,
    }
}
