// SPDX-License-Identifier: Apache-2.0

//! Vertex classes, reducible-configuration detectors and the two
//! discharging engines.
//!
//! Detectors only evaluate the local predicates. Each hit can be
//! re-evaluated on its witness alone with the matching `holds` function.

mod classify;
mod ghost;
mod mad4;

use std::fmt;

use serde::Serialize;

use crate::rational::Rational;

pub use classify::{classify_vertices, ClassKind, VertexClass};
pub use ghost::{detect_ghost_configs, ghost_discharge, ghost_holds, is_d_light};
pub use mad4::{detect_mad4_configs, mad4_discharge, mad4_holds};

/// Reducible configurations. Variants are ordered as the detectors report
/// them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Config {
    C1,
    C2,
    C3,
    #[serde(rename = "P_types")]
    PTypes,
    #[serde(rename = "P_small")]
    PSmall,
    #[serde(rename = "P_bad")]
    PBad,
    #[serde(rename = "P_weakbad")]
    PWeakBad,
    #[serde(rename = "P_weakbad2")]
    PWeakBad2,
    #[serde(rename = "P_weakgood")]
    PWeakGood,
}

impl Config {
    pub const GHOST: [Config; 3] = [Config::C1, Config::C2, Config::C3];
    pub const MAD4: [Config; 6] =
        [Config::PTypes, Config::PSmall, Config::PBad, Config::PWeakBad, Config::PWeakBad2, Config::PWeakGood];

    pub fn as_str(self) -> &'static str {
        match self {
            Config::C1 => "C1",
            Config::C2 => "C2",
            Config::C3 => "C3",
            Config::PTypes => "P_types",
            Config::PSmall => "P_small",
            Config::PBad => "P_bad",
            Config::PWeakBad => "P_weakbad",
            Config::PWeakBad2 => "P_weakbad2",
            Config::PWeakGood => "P_weakgood",
        }
    }
}

impl fmt::Display for Config {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One located configuration.
///
/// Witness layout per configuration:
/// `C1`, `C2`: `[u, v]` with `u` the small vertex;
/// `C3`: `[u, v]` with `v` the light vertex;
/// `P_types`, `P_weakbad2`: `[u]`;
/// `P_small`, `P_bad`: `[u, v]` with `u < v`;
/// `P_weakbad`: `[u, v]`, `u` weakly bad and `v` its bad neighbour;
/// `P_weakgood`: `[u, v1, .., vm]`, all qualifying neighbours in order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfigHit {
    #[serde(rename = "prop")]
    pub config: Config,
    pub vertices: Vec<usize>,
    pub condition: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Transfer {
    pub rule: &'static str,
    pub from: usize,
    pub to: usize,
    pub amount: Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Ghost,
    Mad4,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightReport {
    pub mode: Mode,
    /// Threshold for the ghost engine; absent in mad4 mode.
    pub k: Option<usize>,
    pub initial: Vec<Rational>,
    #[serde(rename = "final")]
    pub final_weights: Vec<Rational>,
    /// Least final charge each vertex needs to be happy.
    pub required: Vec<Rational>,
    pub happy: Vec<bool>,
    /// Membership in the subgraph induced by `(k+1)⁺`-vertices; ghost mode only.
    pub in_h: Option<Vec<bool>>,
    pub ledger: Vec<Transfer>,
    pub total_initial: Rational,
    pub total_final: Rational,
    /// Set when H is empty in ghost mode.
    pub vacuous: bool,
    pub notes: Vec<String>,
}

impl WeightReport {
    fn finish(
        mode: Mode,
        k: Option<usize>,
        initial: Vec<Rational>,
        final_weights: Vec<Rational>,
        required: Vec<Rational>,
        ledger: Vec<Transfer>,
    ) -> WeightReport {
        let happy = final_weights.iter().zip(&required).map(|(w, r)| w >= r).collect();
        WeightReport {
            mode,
            k,
            total_initial: initial.iter().sum(),
            total_final: final_weights.iter().sum(),
            initial,
            final_weights,
            required,
            happy,
            in_h: None,
            ledger,
            vacuous: false,
            notes: Vec::new(),
        }
    }

    pub fn all_happy(&self) -> bool {
        self.happy.iter().all(|&h| h)
    }

    pub fn unhappy(&self) -> Vec<usize> {
        (0..self.happy.len()).filter(|&v| !self.happy[v]).collect()
    }

    pub fn conserved(&self) -> bool {
        self.total_initial == self.total_final
    }
}

/// Applies one phase of transfers computed against a snapshot.
fn apply(weights: &mut [Rational], ledger: &mut Vec<Transfer>, phase: Vec<Transfer>) {
    for t in phase {
        weights[t.from] -= &t.amount;
        weights[t.to] += &t.amount;
        ledger.push(t);
    }
}
