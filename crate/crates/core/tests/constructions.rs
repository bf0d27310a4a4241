// SPDX-License-Identifier: Apache-2.0

use sqcolor::coloring::Budget;
use sqcolor::constructions::{check_claim, g_family, named_graph, Claim, ClaimCheck};
use sqcolor::io::{emit_edge_list_with_header, parse_edge_list, read_header};

fn all_hold(checks: &[ClaimCheck]) {
    for c in checks {
        assert_eq!(c.holds, Some(true), "{} (observed {})", c.claim, c.observed);
    }
}

fn checks_for(name: &str) -> Vec<ClaimCheck> {
    let (g, meta) = named_graph(name).unwrap();
    meta.claims.iter().map(|c| check_claim(&g, &meta, &c.claim, Budget::unlimited())).collect()
}

#[test]
fn named_graph_claims_hold() {
    for name in ["petersen", "figure2", "figure3_full", "figure3_reduced", "path(6)", "cycle(5)", "cycle(8)"] {
        let checks = checks_for(name);
        assert!(!checks.is_empty());
        all_hold(&checks);
    }
}

#[test]
fn g_family_claims_hold() {
    for (n, t) in [(5, 2), (5, 3), (5, 4), (6, 2)] {
        let (g, meta) = g_family(n, t).unwrap();
        let checks: Vec<_> =
            meta.claims.iter().map(|c| check_claim(&g, &meta, &c.claim, Budget::nodes(2_000_000))).collect();
        all_hold(&checks);
    }
}

#[test]
fn g_family_seven_clique_ratio() {
    // For n >= 7 the clique forced in the square is smaller than 5D/2.
    for (n, t) in [(7, 2), (7, 3), (8, 2)] {
        let (g, meta) = g_family(n, t).unwrap();
        let clique = t * n * (n - 1) / 2;
        assert!(meta.claims.iter().any(|c| c.claim == Claim::SquareCliqueAtLeast(clique)));
        assert!(2 * clique < 5 * g.max_degree(), "n={n} t={t}");
        let groups = &meta.roles["groups"];
        assert_eq!(groups.len(), clique);
        assert!(sqcolor::coloring::is_clique(&g.square(), groups));
    }
}

#[test]
fn g_family_degree_formula() {
    for n in 4..=8usize {
        for t in 2..=4usize {
            let (g, _) = g_family(n, t).unwrap();
            let m = n * (n - 1) / 2;
            assert_eq!(g.max_degree(), ((n - 1) * t).max(t * (m + 3 - 2 * n) + 2), "n={n} t={t}");
        }
    }
}

#[test]
fn failing_claims_are_reported() {
    let (g, meta) = named_graph("petersen").unwrap();
    let c = check_claim(&g, &meta, &Claim::SquareChromatic(9), Budget::unlimited());
    assert_eq!(c.holds, Some(false));
    let c = check_claim(&g, &meta, &Claim::RoleCliqueInSquare("nope".into()), Budget::unlimited());
    assert_eq!(c.holds, Some(false));
}

#[test]
fn header_round_trip() {
    let (g, meta) = g_family(5, 2).unwrap();
    let text = emit_edge_list_with_header(&g, &meta.header());
    assert_eq!(parse_edge_list(&text).unwrap(), g);
    let header = read_header(&text);
    assert_eq!(header["name"], "g_family");
    assert_eq!(header["param.t"], "2");
    assert_eq!(header["role.hubs"], "0 1 2 3 4");
}
