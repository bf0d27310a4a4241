// SPDX-License-Identifier: Apache-2.0

mod common;

use sqcolor::coloring::{exact_chromatic, greedy_color, max_clique, Budget};
use sqcolor::constructions::{cycle, petersen};
use sqcolor::{degeneracy_ordering, densest_subgraph, Graph, Rational};

use common::{bfs_square, brute_chromatic, brute_clique, brute_density, connected_sample, gnp, rng};

#[test]
fn densest_matches_exhaustive_on_small_graphs() {
    let mut r = rng(1);
    for i in 0..400 {
        // Include disconnected and edgeless graphs here.
        let n = 1 + i % 10;
        let g = gnp(&mut r, n, 0.1 + (i % 7) as f64 * 0.12);
        let d = densest_subgraph(&g);
        assert_eq!(d.density, brute_density(&g), "graph {i}");
        assert!(!d.witness.is_empty());
        let inside = g.edges_within(&d.witness);
        assert_eq!(Rational::new(inside as i64, d.witness.len() as i64), d.density, "graph {i}: witness");
    }
}

#[test]
fn figure2_density_by_exhaustion() {
    let (g, _) = sqcolor::constructions::named_graph("figure2").unwrap();
    assert_eq!(brute_density(&g), Rational::new(24, 13));
    let d = densest_subgraph(&g);
    assert_eq!(d.density, Rational::new(24, 13));
    assert_eq!(d.witness, (0..13).collect::<Vec<_>>());
}

#[test]
fn exact_chromatic_matches_exhaustive() {
    for (i, g) in connected_sample(2, 300, 9).iter().enumerate() {
        let r = exact_chromatic(g, Budget::unlimited());
        assert_eq!(r.chi(), Some(brute_chromatic(g)), "graph {i}");
        assert!(sqcolor::coloring::check_proper(g, &r.coloring).unwrap());
        assert_eq!(r.coloring.palette as usize, r.upper);
    }
}

#[test]
fn exact_chromatic_on_squares() {
    for (i, g) in connected_sample(3, 150, 9).iter().enumerate() {
        let sq = g.square();
        assert_eq!(exact_chromatic(&sq, Budget::unlimited()).chi(), Some(brute_chromatic(&sq)), "graph {i}");
    }
}

#[test]
fn clique_matches_exhaustive() {
    for (i, g) in connected_sample(4, 300, 10).iter().enumerate() {
        let c = max_clique(g, Budget::unlimited());
        assert!(c.exact && c.verify(g));
        assert_eq!(c.size, brute_clique(g), "graph {i}");
    }
}

#[test]
fn square_matches_bfs() {
    let mut r = rng(5);
    for i in 0..400 {
        let g = gnp(&mut r, 1 + i % 10, 0.05 + (i % 9) as f64 * 0.1);
        assert_eq!(g.square(), bfs_square(&g), "graph {i}");
    }
    assert_eq!(petersen().square(), bfs_square(&petersen()));
}

#[test]
fn clique_le_chi_le_greedy() {
    for (i, g) in connected_sample(6, 200, 9).iter().enumerate() {
        let sq = g.square();
        let (_, ord) = degeneracy_ordering(&sq);
        let greedy = greedy_color(&sq, &ord).unwrap().palette as usize;
        let chi = exact_chromatic(&sq, Budget::unlimited()).chi().unwrap();
        let clique = max_clique(&sq, Budget::unlimited()).size;
        assert!(clique <= chi && chi <= greedy, "graph {i}: {clique} {chi} {greedy}");
    }
}

#[test]
fn budget_exhaustion_yields_valid_interval() {
    let g = sqcolor::constructions::named_graph("figure3_reduced").unwrap().0.square();
    let r = exact_chromatic(&g, Budget::nodes(1));
    assert!(r.lower <= 14 && 14 <= r.upper);
    assert!(sqcolor::coloring::check_proper(&g, &r.coloring).unwrap());
    let c = cycle(7).unwrap();
    assert_eq!(exact_chromatic(&c, Budget::nodes(1)).lower, 2);
    let _ = Graph::empty(0);
}
