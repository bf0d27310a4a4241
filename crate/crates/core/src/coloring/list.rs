// SPDX-License-Identifier: Apache-2.0

//! Greedy list colouring and correspondence (DP) colouring along an
//! ordering. Both succeed whenever every list is longer than the vertex's
//! back degree, which is what a degeneracy bound on `G²` buys.

use std::collections::BTreeMap;

use serde::Serialize;

use super::check_ordering_size;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::Ordering;

/// One finite colour list per vertex. Colours are arbitrary integers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ListAssignment {
    lists: Vec<Vec<i64>>,
}

impl ListAssignment {
    pub fn new(lists: Vec<Vec<i64>>) -> ListAssignment {
        let lists = lists
            .into_iter()
            .map(|mut l| {
                l.sort_unstable();
                l.dedup();
                l
            })
            .collect();
        ListAssignment { lists }
    }

    /// Every vertex gets `1..=size`.
    pub fn uniform(n: usize, size: usize) -> ListAssignment {
        ListAssignment::new(vec![(1..=size as i64).collect(); n])
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    /// Sorted, deduplicated.
    pub fn list(&self, v: usize) -> &[i64] {
        &self.lists[v]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ListColoring {
    pub colors: Vec<i64>,
}

/// Where greedy colouring got stuck: the vertex, its list, and the earlier
/// `(neighbour, colour)` assignments that block list entries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ListFailure {
    pub vertex: usize,
    pub list: Vec<i64>,
    pub blocking: Vec<(usize, i64)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum GreedyOutcome {
    Colored(ListColoring),
    Stuck(ListFailure),
}

impl GreedyOutcome {
    pub fn is_success(&self) -> bool {
        matches!(self, GreedyOutcome::Colored(_))
    }

    pub fn coloring(&self) -> Option<&ListColoring> {
        match self {
            GreedyOutcome::Colored(c) => Some(c),
            GreedyOutcome::Stuck(_) => None,
        }
    }
}

/// Per-edge matchings between the lists of the endpoints. A pair
/// `(a, b)` on edge `uv` (stored with `u < v`) declares that `u` coloured
/// `a` conflicts with `v` coloured `b`. Edges without an entry carry the
/// empty matching.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Correspondence {
    matchings: BTreeMap<(usize, usize), Vec<(i64, i64)>>,
}

impl Correspondence {
    /// Validates that each entry is on an edge of `g` and is a matching.
    /// Keys may be given in either orientation; pairs follow the key.
    pub fn new(
        g: &Graph,
        entries: impl IntoIterator<Item = ((usize, usize), Vec<(i64, i64)>)>,
    ) -> Result<Correspondence> {
        let mut matchings: BTreeMap<(usize, usize), Vec<(i64, i64)>> = BTreeMap::new();
        for ((u, v), pairs) in entries {
            if !g.has_edge(u, v) {
                return Err(Error::CorrespondenceNonEdge(u, v));
            }
            let (key, pairs): ((usize, usize), Vec<(i64, i64)>) =
                if u < v { ((u, v), pairs) } else { ((v, u), pairs.into_iter().map(|(a, b)| (b, a)).collect()) };
            let slot = matchings.entry(key).or_default();
            slot.extend(pairs);
            slot.sort_unstable();
            slot.dedup();
            let mut left: Vec<i64> = slot.iter().map(|p| p.0).collect();
            let mut right: Vec<i64> = slot.iter().map(|p| p.1).collect();
            for side in [&mut left, &mut right] {
                side.sort_unstable();
                if let Some(w) = side.windows(2).find(|w| w[0] == w[1]) {
                    return Err(Error::NotAMatching { u: key.0, v: key.1, color: w[0] });
                }
            }
        }
        Ok(Correspondence { matchings })
    }

    /// Colour `c` conflicts with colour `c` on every edge: plain list colouring.
    pub fn identity(g: &Graph, lists: &ListAssignment) -> Correspondence {
        let matchings = g
            .edges()
            .map(|(u, v)| {
                let common =
                    lists.list(u).iter().filter(|c| lists.list(v).binary_search(c).is_ok()).map(|&c| (c, c)).collect();
                ((u, v), common)
            })
            .collect();
        Correspondence { matchings }
    }

    /// Colour of `v` that conflicts with `u` coloured `cu`, if any.
    pub fn partner(&self, u: usize, cu: i64, v: usize) -> Option<i64> {
        if u < v {
            let m = self.matchings.get(&(u, v))?;
            m.iter().find(|p| p.0 == cu).map(|p| p.1)
        } else {
            let m = self.matchings.get(&(v, u))?;
            m.iter().find(|p| p.1 == cu).map(|p| p.0)
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Vec<(i64, i64)>)> {
        self.matchings.iter()
    }
}

fn check_sizes(g: &Graph, ord: &Ordering, lists: &ListAssignment) -> Result<()> {
    check_ordering_size(g, ord)?;
    if lists.len() != g.n() {
        return Err(Error::InvalidParameter(format!("{} lists for {} vertices", lists.len(), g.n())));
    }
    Ok(())
}

fn greedy<F>(g: &Graph, ord: &Ordering, lists: &ListAssignment, blocks: F) -> GreedyOutcome
where
    F: Fn(usize, i64, usize) -> Option<i64>,
{
    let mut colors: Vec<Option<i64>> = vec![None; g.n()];
    for &v in &ord.sequence {
        let mut blocking = Vec::new();
        let mut blocked = Vec::new();
        for &u in g.neighbors(v) {
            if let Some(cu) = colors[u] {
                if let Some(c) = blocks(u, cu, v) {
                    if lists.list(v).binary_search(&c).is_ok() {
                        blocking.push((u, cu));
                        blocked.push(c);
                    }
                }
            }
        }
        match lists.list(v).iter().find(|c| !blocked.contains(c)) {
            Some(&c) => colors[v] = Some(c),
            None => {
                blocking.sort_unstable();
                return GreedyOutcome::Stuck(ListFailure { vertex: v, list: lists.list(v).to_vec(), blocking });
            }
        }
    }
    GreedyOutcome::Colored(ListColoring {
        colors: colors.into_iter().map(|c| c.expect("every vertex visited")).collect(),
    })
}

/// First-fit from each vertex's own list along `ord`.
pub fn list_color_greedy(g: &Graph, ord: &Ordering, lists: &ListAssignment) -> Result<GreedyOutcome> {
    check_sizes(g, ord, lists)?;
    Ok(greedy(g, ord, lists, |_, cu, _| Some(cu)))
}

/// First-fit along `ord` where a colour of `v` is blocked when an earlier
/// neighbour's colour is matched to it by `corr`.
pub fn correspondence_color_greedy(
    g: &Graph,
    ord: &Ordering,
    lists: &ListAssignment,
    corr: &Correspondence,
) -> Result<GreedyOutcome> {
    check_sizes(g, ord, lists)?;
    for (&(u, v), _) in corr.entries() {
        if !g.has_edge(u, v) {
            return Err(Error::CorrespondenceNonEdge(u, v));
        }
    }
    Ok(greedy(g, ord, lists, |u, cu, v| corr.partner(u, cu, v)))
}

/// Whether `col` picks from the lists and no edge carries a conflicting
/// pair under `corr`.
pub fn check_list_coloring(g: &Graph, lists: &ListAssignment, corr: &Correspondence, col: &ListColoring) -> bool {
    col.colors.len() == g.n()
        && (0..g.n()).all(|v| lists.list(v).binary_search(&col.colors[v]).is_ok())
        && g.edges().all(|(u, v)| corr.partner(u, col.colors[u], v) != Some(col.colors[v]))
}
