// SPDX-License-Identifier: Apache-2.0

//! Closed-form bounds on the chromatic number of `G²`.
//!
//! Parameters below a bound's stated range are still evaluated; the table
//! carries a flag instead of suppressing the value.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;

fn terms(k: u64, delta: u64) -> [i64; 3] {
    let (k, d) = (k as i64, delta as i64);
    [(2 * k - 1) * d - k * k + k, (2 * k - 2) * d + 2 * k.pow(3) + k * k + 1, (k - 1) * d + k.pow(4) + 2 * k.pow(3) + 1]
}

/// The three terms of the degeneracy bound `f(k, Δ)` for `G²` when
/// `mad(G) < 2k`.
pub fn ghost_degeneracy_terms(k: u64, delta: u64) -> [i64; 3] {
    terms(k, delta)
}

/// `f(k, Δ) = max{(2k-1)Δ - k² + k, (2k-2)Δ + 2k³ + k² + 1, (k-1)Δ + k⁴ + 2k³ + 1}`.
pub fn ghost_degeneracy_bound(k: u64, delta: u64) -> u64 {
    terms(k, delta).into_iter().max().unwrap_or(0).max(0) as u64
}

/// Colour bound for `G²` when `mad(G) < 2k`; each term is the
/// corresponding degeneracy term plus one.
pub fn ghost_chromatic_bound(k: u64, delta: u64) -> u64 {
    terms(k, delta).into_iter().map(|t| t + 1).max().unwrap_or(0).max(0) as u64
}

/// Bounds on `max χ(G²)` over graphs with `mad < 4` and maximum degree Δ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Mad4Bounds {
    /// `3Δ + 1`.
    pub upper: u64,
    /// `⌈5Δ/2⌉`.
    pub lower: u64,
    /// The upper bound is proved for `Δ ≥ 8` only.
    pub upper_in_range: bool,
}

pub fn mad4_bounds(delta: u64) -> Mad4Bounds {
    Mad4Bounds { upper: 3 * delta + 1, lower: (5 * delta).div_ceil(2), upper_in_range: delta >= 8 }
}

/// Wegner's conjectured bound for planar graphs.
pub fn wegner_bound(delta: u64) -> Result<u64> {
    match delta {
        0..=2 => Err(Error::InvalidParameter(format!("Wegner bound needs max degree >= 3, got {delta}"))),
        3 => Ok(7),
        4..=7 => Ok(delta + 5),
        _ => Ok(3 * delta / 2 + 1),
    }
}

/// `Δ + 1` when `mad < 16/7`, otherwise not applicable.
pub fn hds_bound(mad: &Rational, delta: u64) -> Option<u64> {
    (*mad < Rational::new(16, 7)).then_some(delta + 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BestUpper {
    GhostChromatic,
    Mad4Upper,
    Tie,
}

impl BestUpper {
    pub fn as_str(self) -> &'static str {
        match self {
            BestUpper::GhostChromatic => "ghost_chi",
            BestUpper::Mad4Upper => "mad4_up",
            BestUpper::Tie => "tie",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundRow {
    pub k: u64,
    pub delta: u64,
    pub ghost_deg: u64,
    pub ghost_chi: u64,
    pub mad4_up: u64,
    pub mad4_low: u64,
    pub wegner: Option<u64>,
    pub hds_target: u64,
    /// Smaller of the two upper bounds that apply to `mad < 2k`; the
    /// `3Δ + 1` bound only competes when `k = 2`.
    pub best_upper: BestUpper,
    pub flags: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundTable {
    pub rows: Vec<BoundRow>,
}

pub fn bound_row(k: u64, delta: u64) -> BoundRow {
    let ghost_chi = ghost_chromatic_bound(k, delta);
    let m4 = mad4_bounds(delta);
    let best_upper = if k != 2 {
        BestUpper::GhostChromatic
    } else {
        match m4.upper.cmp(&ghost_chi) {
            std::cmp::Ordering::Less => BestUpper::Mad4Upper,
            std::cmp::Ordering::Equal => BestUpper::Tie,
            std::cmp::Ordering::Greater => BestUpper::GhostChromatic,
        }
    };
    let mut flags = Vec::new();
    if k < 2 {
        flags.push("k<2 outside stated hypotheses".to_string());
    }
    if !m4.upper_in_range {
        flags.push("3D+1 outside stated hypotheses (D<8)".to_string());
    }
    if delta < 3 {
        flags.push("wegner undefined (D<3)".to_string());
    }
    BoundRow {
        k,
        delta,
        ghost_deg: ghost_degeneracy_bound(k, delta),
        ghost_chi,
        mad4_up: m4.upper,
        mad4_low: m4.lower,
        wegner: wegner_bound(delta).ok(),
        hds_target: delta + 1,
        best_upper,
        flags,
    }
}

pub fn compare_table(k: u64, delta_min: u64, delta_max: u64) -> Result<BoundTable> {
    if delta_min > delta_max {
        return Err(Error::InvalidParameter(format!("empty range {delta_min}..={delta_max}")));
    }
    Ok(BoundTable { rows: (delta_min..=delta_max).map(|d| bound_row(k, d)).collect() })
}

const COLUMNS: [&str; 8] = ["k", "delta", "ghost_deg", "ghost_chi", "mad4_up", "mad4_low", "wegner", "best_upper"];

impl BoundTable {
    fn cells(row: &BoundRow) -> [String; 8] {
        [
            row.k.to_string(),
            row.delta.to_string(),
            row.ghost_deg.to_string(),
            row.ghost_chi.to_string(),
            row.mad4_up.to_string(),
            row.mad4_low.to_string(),
            row.wegner.map_or_else(|| "-".to_string(), |w| w.to_string()),
            row.best_upper.as_str().to_string(),
        ]
    }

    pub fn to_csv(&self) -> String {
        let mut out = COLUMNS.join(",");
        out.push('\n');
        for row in &self.rows {
            out.push_str(&Self::cells(row).join(","));
            out.push('\n');
        }
        out
    }

    /// Right-aligned columns, with flags appended after the last column.
    pub fn to_text(&self) -> String {
        let rows: Vec<[String; 8]> = self.rows.iter().map(Self::cells).collect();
        let widths: Vec<usize> =
            (0..8).map(|i| rows.iter().map(|r| r[i].len()).chain([COLUMNS[i].len()]).max().unwrap_or(0)).collect();
        let mut out = String::new();
        let line =
            |cells: &[&str]| cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect::<Vec<_>>().join("  ");
        let _ = writeln!(out, "{}", line(&COLUMNS));
        for (cells, row) in rows.iter().zip(&self.rows) {
            let refs: Vec<&str> = cells.iter().map(String::as_str).collect();
            let mut l = line(&refs);
            if !row.flags.is_empty() {
                l.push_str("  # ");
                l.push_str(&row.flags.join("; "));
            }
            let _ = writeln!(out, "{l}");
        }
        out
    }
}
