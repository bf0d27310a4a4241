// SPDX-License-Identifier: Apache-2.0

//! One-shot summary of a graph: density, degeneracy, square colouring and
//! which closed-form bounds apply and hold.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bounds::{ghost_chromatic_bound, ghost_degeneracy_bound, hds_bound, mad4_bounds, wegner_bound};
use crate::coloring::{max_clique, square_color_witness, Budget};
use crate::discharging::{detect_ghost_configs, detect_mad4_configs, Config};
use crate::graph::Graph;
use crate::metrics::{degeneracy_ordering, densest_subgraph};
use crate::rational::Rational;

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GraphSummary {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MadSummary {
    pub value: Rational,
    /// For reading only; `value` is authoritative.
    pub decimal: f64,
    pub witness_size: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CliqueSummary {
    pub size: usize,
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub name: String,
    pub statement: String,
    pub bound: u64,
    pub observed: u64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub schema: u32,
    pub graph: GraphSummary,
    pub mad: MadSummary,
    pub degeneracy: usize,
    pub square_degeneracy: usize,
    pub square_colors: usize,
    pub square_clique: CliqueSummary,
    /// Smallest `k >= 2` with `mad < 2k`.
    pub ghost_k: u64,
    /// Values of each bound at this graph's parameters, whether or not its
    /// hypotheses hold.
    pub bounds: BTreeMap<String, Option<u64>>,
    pub checks: Vec<BoundCheck>,
    pub config_hits: BTreeMap<String, usize>,
}

impl VerifyReport {
    pub fn all_checks_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "n = {}, m = {}, max degree = {}\nmad = {} (~{:.6})\ndegeneracy = {}, square degeneracy = {}\nsquare colours (greedy) = {}, square clique {} {}\n",
            self.graph.n,
            self.graph.m,
            self.graph.max_degree,
            self.mad.value,
            self.mad.decimal,
            self.degeneracy,
            self.square_degeneracy,
            self.square_colors,
            if self.square_clique.exact { "=" } else { ">=" },
            self.square_clique.size,
        );
        for c in &self.checks {
            let verdict = if c.holds { "ok" } else { "VIOLATED" };
            out.push_str(&format!("check {}: {} ({} vs {}) {verdict}\n", c.name, c.statement, c.observed, c.bound));
        }
        for (config, count) in &self.config_hits {
            out.push_str(&format!("hits {config}: {count}\n"));
        }
        out
    }
}

/// Builds the report. `clique_budget` limits the clique search in the
/// square; an exhausted search is reported with `exact = false`.
pub fn verify(g: &Graph, clique_budget: Budget) -> VerifyReport {
    let delta = g.max_degree() as u64;
    let densest = densest_subgraph(g);
    let mad = densest.mad();
    let (degeneracy, _) = degeneracy_ordering(g);
    let witness = square_color_witness(g);
    let clique = max_clique(&g.square(), clique_budget);
    // mad < 2k with k as small as possible, but at least 2.
    let ghost_k = ((&mad / &Rational::from_int(2)).floor() + 1u32).try_into().unwrap_or(u64::MAX).max(2);
    let below_four = mad < Rational::from_int(4);

    let mut bounds = BTreeMap::new();
    let m4 = mad4_bounds(delta);
    bounds.insert("ghost_deg".to_string(), Some(ghost_degeneracy_bound(ghost_k, delta)));
    bounds.insert("ghost_chi".to_string(), Some(ghost_chromatic_bound(ghost_k, delta)));
    bounds.insert("mad4_up".to_string(), Some(m4.upper));
    bounds.insert("mad4_low".to_string(), Some(m4.lower));
    bounds.insert("wegner".to_string(), wegner_bound(delta).ok());
    bounds.insert("hds".to_string(), hds_bound(&mad, delta));

    let sq_deg = witness.square_degeneracy as u64;
    let colors = witness.colors_used as u64;
    let mut checks = Vec::new();
    let mut check = |name: &str, statement: String, bound: u64, observed: u64| {
        checks.push(BoundCheck { name: name.to_string(), statement, bound, observed, holds: observed <= bound });
    };
    check(
        "ghost_degeneracy",
        format!("mad < {} implies square degeneracy <= f({ghost_k}, {delta})", 2 * ghost_k),
        ghost_degeneracy_bound(ghost_k, delta),
        sq_deg,
    );
    check(
        "ghost_chromatic",
        format!("mad < {} implies square colours <= f({ghost_k}, {delta}) + 1", 2 * ghost_k),
        ghost_chromatic_bound(ghost_k, delta),
        colors,
    );
    if below_four {
        let reach = 3 * delta.max(8);
        check("mad4_degeneracy", "mad < 4 implies square degeneracy <= 3 max(8, D)".to_string(), reach, sq_deg);
        if delta >= 8 {
            check(
                "mad4_chromatic",
                "mad < 4 and D >= 8 implies square colours <= 3D + 1".to_string(),
                m4.upper,
                colors,
            );
        }
    }
    check("clique_vs_colours", "square clique <= square colours".to_string(), colors, clique.size as u64);

    let mut config_hits = BTreeMap::new();
    for config in Config::MAD4 {
        config_hits.insert(config.as_str().to_string(), 0);
    }
    for config in Config::GHOST {
        config_hits.insert(format!("{}[k={ghost_k}]", config.as_str()), 0);
    }
    for hit in detect_mad4_configs(g) {
        *config_hits.get_mut(hit.config.as_str()).expect("listed") += 1;
    }
    for hit in detect_ghost_configs(g, ghost_k as usize).expect("k is at least 2") {
        *config_hits.get_mut(&format!("{}[k={ghost_k}]", hit.config.as_str())).expect("listed") += 1;
    }

    VerifyReport {
        schema: SCHEMA,
        graph: GraphSummary { n: g.n(), m: g.edge_count(), max_degree: g.max_degree() },
        mad: MadSummary { decimal: mad.to_f64(), value: mad, witness_size: densest.witness.len() },
        degeneracy,
        square_degeneracy: witness.square_degeneracy,
        square_colors: witness.colors_used,
        square_clique: CliqueSummary { size: clique.size, exact: clique.exact },
        ghost_k,
        bounds,
        checks,
        config_hits,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::petersen;

    #[test]
    fn petersen_report() {
        let r = verify(&petersen(), Budget::unlimited());
        assert_eq!(r.mad.value, Rational::from_int(3));
        assert_eq!((r.square_colors, r.square_clique.size, r.ghost_k), (10, 10, 2));
        assert!(r.all_checks_hold());
        assert_eq!(r.bounds["hds"], None);
        let json = r.to_json();
        assert!(json.contains("\"schema\": 1"));
        assert!(json.contains("\"value\": \"3/1\""));
    }
}
