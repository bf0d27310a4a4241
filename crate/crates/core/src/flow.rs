// SPDX-License-Identifier: Apache-2.0

//! Dinic max-flow with integer capacities and min-cut extraction.

use std::collections::VecDeque;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: i64,
    rev: usize,
}

#[derive(Debug, Clone)]
pub(crate) struct FlowNetwork {
    arcs: Vec<Vec<Arc>>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork { arcs: vec![Vec::new(); nodes], level: vec![-1; nodes], iter: vec![0; nodes] }
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cap: i64) {
        debug_assert!(cap >= 0);
        let rev_from = self.arcs[to].len();
        let rev_to = self.arcs[from].len();
        self.arcs[from].push(Arc { to, cap, rev: rev_from });
        self.arcs[to].push(Arc { to: from, cap: 0, rev: rev_to });
    }

    fn bfs(&mut self, s: usize) {
        self.level.fill(-1);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for a in &self.arcs[u] {
                if a.cap > 0 && self.level[a.to] < 0 {
                    self.level[a.to] = self.level[u] + 1;
                    queue.push_back(a.to);
                }
            }
        }
    }

    fn dfs(&mut self, u: usize, t: usize, pushed: i64) -> i64 {
        if u == t {
            return pushed;
        }
        while self.iter[u] < self.arcs[u].len() {
            let i = self.iter[u];
            let Arc { to, cap, rev } = self.arcs[u][i];
            if cap > 0 && self.level[u] < self.level[to] {
                let d = self.dfs(to, t, pushed.min(cap));
                if d > 0 {
                    self.arcs[u][i].cap -= d;
                    self.arcs[to][rev].cap += d;
                    return d;
                }
            }
            self.iter[u] += 1;
        }
        0
    }

    pub fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut flow = 0;
        loop {
            self.bfs(s);
            if self.level[t] < 0 {
                return flow;
            }
            self.iter.fill(0);
            loop {
                let f = self.dfs(s, t, i64::MAX);
                if f == 0 {
                    break;
                }
                flow += f;
            }
        }
    }

    /// Nodes reachable from `s` in the residual network; valid after
    /// [`max_flow`](Self::max_flow) as the source side of a minimum cut.
    pub fn source_side(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.arcs.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for a in &self.arcs[u] {
                if a.cap > 0 && !seen[a.to] {
                    seen[a.to] = true;
                    stack.push(a.to);
                }
            }
        }
        seen
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classic_network() {
        let mut f = FlowNetwork::new(6);
        for (u, v, c) in [(0, 1, 10), (0, 2, 10), (1, 3, 4), (1, 4, 8), (2, 4, 9), (3, 5, 10), (4, 3, 6), (4, 5, 10)] {
            f.add_arc(u, v, c);
        }
        assert_eq!(f.max_flow(0, 5), 19);
    }

    #[test]
    fn min_cut_side() {
        let mut f = FlowNetwork::new(4);
        f.add_arc(0, 1, 5);
        f.add_arc(1, 2, 1);
        f.add_arc(2, 3, 5);
        assert_eq!(f.max_flow(0, 3), 1);
        assert_eq!(f.source_side(0), vec![true, true, false, false]);
    }
}
