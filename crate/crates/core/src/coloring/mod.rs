// SPDX-License-Identifier: Apache-2.0

//! Proper colourings: first-fit along an ordering, exact chromatic number,
//! maximum cliques, and list / correspondence greedy colouring.

mod bitset;
mod clique;
mod exact;
mod list;

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::{degeneracy_ordering, Ordering};

pub use clique::{is_clique, max_clique, CliqueCertificate};
pub use exact::{exact_chromatic, ChromaticResult};
pub use list::{
    check_list_coloring, correspondence_color_greedy, list_color_greedy, Correspondence, GreedyOutcome, ListAssignment,
    ListColoring, ListFailure,
};

/// Colours are 1-based; `palette` is the largest colour used.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coloring {
    pub colors: Vec<u32>,
    pub palette: u32,
}

impl Coloring {
    pub fn from_colors(colors: Vec<u32>) -> Coloring {
        let palette = colors.iter().copied().max().unwrap_or(0);
        Coloring { colors, palette }
    }
}

/// Search limits for the exact solvers. Running out is reported in the
/// result, never as an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Budget {
        Budget::default()
    }

    pub fn nodes(n: u64) -> Budget {
        Budget { max_nodes: Some(n), max_time: None }
    }

    pub fn with_time(mut self, t: Duration) -> Budget {
        self.max_time = Some(t);
        self
    }
}

pub(crate) struct Meter {
    budget: Budget,
    start: Instant,
    pub nodes: u64,
    pub exhausted: bool,
}

impl Meter {
    pub fn new(budget: Budget) -> Meter {
        Meter { budget, start: Instant::now(), nodes: 0, exhausted: false }
    }

    /// Counts one search node; returns false once the budget is spent.
    pub fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        let over_nodes = self.budget.max_nodes.is_some_and(|cap| self.nodes > cap);
        let over_time = self.nodes % 1024 == 0 && self.budget.max_time.is_some_and(|t| self.start.elapsed() > t);
        self.exhausted = over_nodes || over_time;
        !self.exhausted
    }
}

fn check_ordering_size(g: &Graph, ord: &Ordering) -> Result<()> {
    if ord.len() != g.n() {
        return Err(Error::NotPermutation { n: g.n(), reason: format!("ordering has {} entries", ord.len()) });
    }
    Ok(())
}

/// First-fit along `ord`: each vertex takes the smallest colour not used
/// by an earlier neighbour.
pub fn greedy_color(g: &Graph, ord: &Ordering) -> Result<Coloring> {
    check_ordering_size(g, ord)?;
    let mut colors = vec![0u32; g.n()];
    let mut taken = Vec::new();
    for &v in &ord.sequence {
        taken.clear();
        taken.resize(g.degree(v) + 2, false);
        for &w in g.neighbors(v) {
            let c = colors[w] as usize;
            if c != 0 && c < taken.len() {
                taken[c] = true;
            }
        }
        colors[v] = (1..taken.len()).find(|&c| !taken[c]).unwrap_or(taken.len()) as u32;
    }
    Ok(Coloring::from_colors(colors))
}

/// Whether no edge of `g` is monochromatic.
pub fn check_proper(g: &Graph, c: &Coloring) -> Result<bool> {
    if c.colors.len() != g.n() {
        return Err(Error::MissingColor(c.colors.len().min(g.n())));
    }
    if let Some(v) = c.colors.iter().position(|&x| x == 0) {
        return Err(Error::MissingColor(v));
    }
    Ok(g.edges().all(|(u, v)| c.colors[u] != c.colors[v]))
}

/// A proper colouring of `G²` obtained by first-fit along a degeneracy
/// ordering of `G²`.
#[derive(Debug, Clone, Serialize)]
pub struct SquareColoring {
    pub colors_used: usize,
    pub coloring: Coloring,
    pub ordering: Ordering,
    pub square_degeneracy: usize,
}

pub fn square_color_witness(g: &Graph) -> SquareColoring {
    let sq = g.square();
    let (square_degeneracy, ordering) = degeneracy_ordering(&sq);
    let coloring = greedy_color(&sq, &ordering).expect("ordering built from the same graph");
    SquareColoring { colors_used: coloring.palette as usize, coloring, ordering, square_degeneracy }
}
