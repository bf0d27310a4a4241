// SPDX-License-Identifier: Apache-2.0

//! Configurations C1–C3 and the discharging rules R0–R2 for `mad < 2k`.
//!
//! Throughout, `D(v)` counts the neighbours of `v` of degree at least
//! `k + 1`, and `H` is the subgraph induced by those vertices.

use crate::error::{Error, Result};
use crate::graph::{big_degree_count, Graph};
use crate::rational::Rational;

use super::{apply, Config, ConfigHit, Mode, Transfer, WeightReport};

fn r(v: usize) -> Rational {
    Rational::from(v)
}

fn check_k(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("k must be at least 2, got {k}")));
    }
    Ok(())
}

fn count_at_least(g: &Graph, big: &[usize], v: usize, threshold: &Rational) -> usize {
    g.neighbors(v).iter().filter(|&&w| &r(big[w]) >= threshold).count()
}

/// Which branch of the light-vertex definition applies, if any.
fn light_branch(g: &Graph, big: &[usize], k: usize, v: usize, d: usize) -> Option<u8> {
    let dv = big[v];
    let split = r(k) + Rational::new((d * k) as i64, (2 * d - 2 * k) as i64);
    let top = Rational::new((d * k) as i64, (d - k) as i64);
    let dvr = r(dv);
    if dv > k && dvr < split {
        let threshold = Rational::new((k * k * d) as i64, ((d - k) * (dv - k)) as i64);
        (count_at_least(g, big, v, &threshold) < k).then_some(1)
    } else if dvr >= split && dvr < top {
        let bound = &dvr - &Rational::new((dv as i64 - 2 * k as i64) * d as i64, (2 * k - d) as i64);
        (r(count_at_least(g, big, v, &r(2 * k))) < bound).then_some(2)
    } else {
        None
    }
}

/// Whether `v` is `D`-light with respect to threshold `k`; needs `k < D < 2k`.
pub fn is_d_light(g: &Graph, k: usize, v: usize, d: usize) -> Result<bool> {
    if !(k < d && d < 2 * k) {
        return Err(Error::InvalidParameter(format!("D must satisfy {k} < D < {}, got {d}", 2 * k)));
    }
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let big = big_degree_count(g, k).counts;
    Ok(light_branch(g, &big, k, v, d).is_some())
}

fn c2_count(g: &Graph, big: &[usize], k: usize, v: usize) -> Option<(usize, Rational)> {
    let dv = big[v];
    if !(k < dv && dv < 2 * k) {
        return None;
    }
    let threshold = Rational::new((2 * k * k) as i64, (dv - k) as i64);
    let count = count_at_least(g, big, v, &threshold);
    (count < k).then_some((count, threshold))
}

fn c3_ok(g: &Graph, big: &[usize], k: usize, u: usize) -> bool {
    k < big[u] && big[u] < 2 * k && g.neighbors(u).iter().all(|&w| g.degree(w) > k)
}

/// All occurrences of C1, C2 and C3, sorted by configuration then witness.
pub fn detect_ghost_configs(g: &Graph, k: usize) -> Result<Vec<ConfigHit>> {
    check_k(k)?;
    let big = big_degree_count(g, k).counts;
    let mut hits = Vec::new();
    for u in 0..g.n() {
        if g.degree(u) <= k {
            for &v in g.neighbors(u) {
                if big[v] <= k {
                    hits.push(ConfigHit {
                        config: Config::C1,
                        vertices: vec![u, v],
                        condition: format!("d(u)={} <= k={k} and D(v)={} <= k", g.degree(u), big[v]),
                    });
                } else if let Some((count, threshold)) = c2_count(g, &big, k, v) {
                    hits.push(ConfigHit {
                        config: Config::C2,
                        vertices: vec![u, v],
                        condition: format!(
                            "d(u)={} <= k={k}, D(v)={} in ({k},{}), {count} <= k-1 neighbours w with D(w) >= {threshold}",
                            g.degree(u),
                            big[v],
                            2 * k
                        ),
                    });
                }
            }
        }
        if c3_ok(g, &big, k, u) {
            for &v in g.neighbors(u) {
                if let Some(branch) = light_branch(g, &big, k, v, big[u]) {
                    hits.push(ConfigHit {
                        config: Config::C3,
                        vertices: vec![u, v],
                        condition: format!(
                            "D(u)={} in ({k},{}), no {k}^- neighbour, v is {}-light (branch {branch}, D(v)={})",
                            big[u],
                            2 * k,
                            big[u],
                            big[v]
                        ),
                    });
                }
            }
        }
    }
    hits.sort_by(|a, b| (a.config, &a.vertices).cmp(&(b.config, &b.vertices)));
    Ok(hits)
}

/// Re-evaluates a ghost configuration predicate on the hit's witness only.
pub fn ghost_holds(g: &Graph, k: usize, hit: &ConfigHit) -> bool {
    let [u, v] = hit.vertices[..] else {
        return false;
    };
    if k < 2 || u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
        return false;
    }
    let big = big_degree_count(g, k).counts;
    match hit.config {
        Config::C1 => g.degree(u) <= k && big[v] <= k,
        Config::C2 => g.degree(u) <= k && c2_count(g, &big, k, v).is_some(),
        Config::C3 => c3_ok(g, &big, k, u) && light_branch(g, &big, k, v, big[u]).is_some(),
        _ => false,
    }
}

/// Rules R0, R1, R2 applied in order, each against the charges left by the
/// previous rule.
///
/// R0: every vertex of H gives 1 to each neighbour outside H.
/// R1: every vertex with `D(u) >= 2k + 1` and positive charge splits it
/// equally among its neighbours `v` in H with `D(v) < 2k`.
/// R2: every vertex with positive charge splits it equally among its
/// neighbours in H with negative charge.
///
/// A vertex is happy when its final charge is at least 0 if `d(v) > k`, and
/// at least `d(v) + D(v) - 2k` otherwise.
pub fn ghost_discharge(g: &Graph, k: usize) -> Result<WeightReport> {
    check_k(k)?;
    let n = g.n();
    let big = big_degree_count(g, k).counts;
    let in_h: Vec<bool> = (0..n).map(|v| g.degree(v) > k).collect();
    let two_k = 2 * k as i64;
    let initial: Vec<Rational> = (0..n).map(|v| Rational::from_int(g.degree(v) as i64 - two_k)).collect();
    let mut w = initial.clone();
    let mut ledger = Vec::new();
    let mut notes = Vec::new();

    let mut phase = Vec::new();
    for u in (0..n).filter(|&u| in_h[u]) {
        for &x in g.neighbors(u).iter().filter(|&&x| !in_h[x]) {
            phase.push(Transfer { rule: "R0", from: u, to: x, amount: Rational::from_int(1) });
        }
    }
    apply(&mut w, &mut ledger, phase);

    let mut phase = Vec::new();
    for u in (0..n).filter(|&u| big[u] > 2 * k) {
        let recipients: Vec<usize> = g.neighbors(u).iter().copied().filter(|&v| in_h[v] && big[v] < 2 * k).collect();
        if !in_h[u] && w[u].is_positive() && !recipients.is_empty() {
            notes.push(format!("R1 fired at vertex {u} outside H"));
        }
        split(&mut phase, "R1", u, &w[u], &recipients);
    }
    apply(&mut w, &mut ledger, phase);

    let mut phase = Vec::new();
    for u in 0..n {
        let recipients: Vec<usize> =
            g.neighbors(u).iter().copied().filter(|&v| in_h[v] && w[v].is_negative()).collect();
        split(&mut phase, "R2", u, &w[u], &recipients);
    }
    apply(&mut w, &mut ledger, phase);

    let required = (0..n)
        .map(|v| if in_h[v] { Rational::zero() } else { Rational::from_int((g.degree(v) + big[v]) as i64 - two_k) })
        .collect();
    let mut report = WeightReport::finish(Mode::Ghost, Some(k), initial, w, required, ledger);
    report.vacuous = !in_h.iter().any(|&h| h);
    if report.vacuous {
        notes.push(format!("H is empty: no vertex has degree above {k}"));
    }
    report.in_h = Some(in_h);
    report.notes = notes;
    Ok(report)
}

fn split(phase: &mut Vec<Transfer>, rule: &'static str, from: usize, weight: &Rational, recipients: &[usize]) {
    if !weight.is_positive() || recipients.is_empty() {
        return;
    }
    let share = weight / &Rational::from(recipients.len());
    phase.extend(recipients.iter().map(|&to| Transfer { rule, from, to, amount: share.clone() }));
}
