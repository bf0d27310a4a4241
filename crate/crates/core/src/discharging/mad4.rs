// SPDX-License-Identifier: Apache-2.0

//! Configurations and discharging rules for `mad < 4`.

use crate::graph::{degree_profile, Graph};
use crate::rational::Rational;

use super::classify::{ClassKind, VertexClass};
use super::{apply, Config, ConfigHit, Mode, Transfer, WeightReport};

struct Ctx<'a> {
    g: &'a Graph,
    classes: Vec<VertexClass>,
    nice_neighbours: Vec<usize>,
}

impl<'a> Ctx<'a> {
    fn new(g: &'a Graph) -> Ctx<'a> {
        let classes: Vec<VertexClass> = degree_profile(g).entries.into_iter().map(VertexClass::of).collect();
        let nice_neighbours = (0..g.n()).map(|v| g.neighbors(v).iter().filter(|&&w| classes[w].nice).count()).collect();
        Ctx { g, classes, nice_neighbours }
    }

    fn small(&self, v: usize) -> bool {
        self.g.degree(v) <= 3
    }

    fn types(&self, u: usize) -> bool {
        !self.classes[u].small_degree && self.classes[u].class == ClassKind::Other
    }

    fn weakbad(&self, u: usize, v: usize) -> bool {
        self.classes[u].is_weakly_bad() && self.classes[v].is_bad() && self.nice_neighbours[v] < 2
    }

    fn weakbad2(&self, u: usize) -> bool {
        self.classes[u].class == ClassKind::WeaklyBad2
            && !self.g.neighbors(u).iter().any(|&w| self.classes[w].is_good())
    }

    /// Neighbour counted against a weakly good vertex.
    fn weakgood_burden(&self, v: usize) -> bool {
        self.g.degree(v) == 3 || (self.classes[v].is_bad() && self.nice_neighbours[v] <= 1)
    }

    fn weakgood(&self, u: usize) -> Option<Vec<usize>> {
        if self.classes[u].class != ClassKind::WeaklyGood {
            return None;
        }
        let burden: Vec<usize> = self.g.neighbors(u).iter().copied().filter(|&v| self.weakgood_burden(v)).collect();
        (burden.len() >= 4).then_some(burden)
    }
}

/// All occurrences of the six configurations, sorted by configuration then
/// witness.
pub fn detect_mad4_configs(g: &Graph) -> Vec<ConfigHit> {
    let cx = Ctx::new(g);
    let profile = degree_profile(g);
    let mut hits = Vec::new();
    let mut hit = |config, vertices, condition| hits.push(ConfigHit { config, vertices, condition });
    for u in 0..g.n() {
        let e = profile.get(u);
        if cx.types(u) {
            hit(
                Config::PTypes,
                vec![u],
                format!("d={}, d-d2={}, d3={}: not bad, weakly bad, weakly good or good", e.d, e.d - e.d2, e.d3),
            );
        }
        for &v in g.neighbors(u).iter().filter(|&&v| v > u) {
            if cx.small(u) && cx.small(v) {
                hit(
                    Config::PSmall,
                    vec![u, v],
                    format!("adjacent 3^- vertices of degrees {} and {}", g.degree(u), g.degree(v)),
                );
            }
            if cx.classes[u].is_bad() && cx.classes[v].is_bad() {
                hit(Config::PBad, vec![u, v], "adjacent bad vertices".to_string());
            }
        }
        for &v in g.neighbors(u) {
            if cx.weakbad(u, v) {
                hit(
                    Config::PWeakBad,
                    vec![u, v],
                    format!("bad neighbour of a weakly bad vertex has {} < 2 nice neighbours", cx.nice_neighbours[v]),
                );
            }
        }
        if cx.weakbad2(u) {
            hit(Config::PWeakBad2, vec![u], "weakly bad of type 2 with no good neighbour".to_string());
        }
        if let Some(burden) = cx.weakgood(u) {
            let condition = format!(
                "weakly good with {} >= 4 neighbours of degree 3 or bad with <= 1 nice neighbour",
                burden.len()
            );
            hit(Config::PWeakGood, std::iter::once(u).chain(burden).collect(), condition);
        }
    }
    hits.sort_by(|a, b| (a.config, &a.vertices).cmp(&(b.config, &b.vertices)));
    hits
}

/// Re-evaluates a mad4 configuration predicate on the hit's witness only.
pub fn mad4_holds(g: &Graph, hit: &ConfigHit) -> bool {
    if hit.vertices.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let cx = Ctx::new(g);
    match (hit.config, &hit.vertices[..]) {
        (Config::PTypes, &[u]) => cx.types(u),
        (Config::PSmall, &[u, v]) => g.has_edge(u, v) && cx.small(u) && cx.small(v),
        (Config::PBad, &[u, v]) => g.has_edge(u, v) && cx.classes[u].is_bad() && cx.classes[v].is_bad(),
        (Config::PWeakBad, &[u, v]) => g.has_edge(u, v) && cx.weakbad(u, v),
        (Config::PWeakBad2, &[u]) => cx.weakbad2(u),
        (Config::PWeakGood, [u, rest @ ..]) => {
            cx.classes[*u].class == ClassKind::WeaklyGood
                && rest.len() >= 4
                && rest.iter().all(|&v| g.has_edge(*u, v) && cx.weakgood_burden(v))
        }
        _ => false,
    }
}

/// Rule 0 on the initial charges, then Rules 1–3:
///
/// 0. every vertex gives 1 to each neighbour of degree 2 and 1/3 to each
///    neighbour of degree 3;
/// 1. every nice vertex gives 1/2 to each bad neighbour;
/// 2. every 4⁺-vertex that is not nice gives 1/3 to each bad neighbour
///    with at most one nice neighbour;
/// 3. every good vertex gives 1/3 to each weakly bad neighbour of type 2.
///
/// Every vertex needs a final charge of at least 0 to be happy.
pub fn mad4_discharge(g: &Graph) -> WeightReport {
    let n = g.n();
    let cx = Ctx::new(g);
    let initial: Vec<Rational> = (0..n).map(|v| Rational::from_int(g.degree(v) as i64 - 4)).collect();
    let mut w = initial.clone();
    let mut ledger = Vec::new();
    let third = Rational::new(1, 3);

    let phase = |rule: &'static str, give: &dyn Fn(usize, usize) -> Option<Rational>| {
        let mut out = Vec::new();
        for from in 0..n {
            for &to in g.neighbors(from) {
                if let Some(amount) = give(from, to) {
                    out.push(Transfer { rule, from, to, amount });
                }
            }
        }
        out
    };

    let rule0 = phase("rule0", &|_, to| match g.degree(to) {
        2 => Some(Rational::from_int(1)),
        3 => Some(third.clone()),
        _ => None,
    });
    apply(&mut w, &mut ledger, rule0);
    let rule1 =
        phase("rule1", &|from, to| (cx.classes[from].nice && cx.classes[to].is_bad()).then(|| Rational::new(1, 2)));
    apply(&mut w, &mut ledger, rule1);
    let rule2 = phase("rule2", &|from, to| {
        (g.degree(from) >= 4 && !cx.classes[from].nice && cx.classes[to].is_bad() && cx.nice_neighbours[to] <= 1)
            .then(|| third.clone())
    });
    apply(&mut w, &mut ledger, rule2);
    let rule3 = phase("rule3", &|from, to| {
        (cx.classes[from].is_good() && cx.classes[to].class == ClassKind::WeaklyBad2).then(|| third.clone())
    });
    apply(&mut w, &mut ledger, rule3);

    WeightReport::finish(Mode::Mad4, None, initial, w, vec![Rational::zero(); n], ledger)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    /// Circulant `C_n(1..=r)`, a `2r`-regular graph.
    fn circulant(n: usize, r: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|i| (1..=r).map(move |o| (i, (i + o) % n)))).unwrap()
    }

    #[test]
    fn ten_regular_is_clean() {
        let g = circulant(15, 5);
        assert!(detect_mad4_configs(&g).is_empty());
        let rep = mad4_discharge(&g);
        assert!(rep.ledger.is_empty());
        assert!(rep.final_weights.iter().all(|w| *w == Rational::from_int(6)));
        assert!(rep.all_happy());
    }

    #[test]
    fn cycle_rule0() {
        let g = cycle(5);
        let rep = mad4_discharge(&g);
        assert_eq!(rep.ledger.len(), 10);
        assert!(rep.final_weights.iter().all(|w| *w == Rational::from_int(-2)));
        assert!(!rep.all_happy());
        let hits = detect_mad4_configs(&g);
        assert_eq!(hits.len(), 5);
        assert!(hits.iter().all(|h| h.config == Config::PSmall && mad4_holds(&g, h)));
    }

    #[test]
    fn bad_vertex_rules() {
        // Vertex 0 has three degree-2 neighbours and three neighbours in a
        // 10-regular pool, so d - d2 = 3.
        let pool = circulant(15, 5);
        let mut edges: Vec<(usize, usize)> = pool.edges().collect();
        let (c, twos) = (15, [16, 17, 18]);
        edges.extend([(c, 0), (c, 1), (c, 2)]);
        for (i, &t) in twos.iter().enumerate() {
            edges.extend([(c, t), (t, 3 + i)]);
        }
        let g = Graph::new(19, edges).unwrap();
        let classes = Ctx::new(&g).classes;
        assert!(classes[c].is_bad());
        let rep = mad4_discharge(&g);
        // 6 - 4 - 3 (rule 0) + 3 * 1/2 (rule 1 from three nice neighbours).
        assert_eq!(rep.final_weights[c], Rational::new(1, 2));
        assert!(rep.conserved());
        assert!(detect_mad4_configs(&g).iter().all(|h| mad4_holds(&g, h)));
    }
}
