// SPDX-License-Identifier: Apache-2.0

//! Colouring squares of sparse graphs.
//!
//! Exact maximum average degree, degeneracy orderings of `G` and `G²`,
//! greedy, exact, list and correspondence colouring, closed-form bounds on
//! `χ(G²)`, the extremal constructions, and an executable version of the
//! reducible configurations and discharging rules used to prove those
//! bounds. All densities and charges are exact rationals.

pub mod bounds;
pub mod cli;
pub mod coloring;
pub mod constructions;
pub mod discharging;
pub mod error;
mod flow;
pub mod graph;
pub mod io;
pub mod metrics;
pub mod rational;
pub mod report;

pub use error::{Error, Result};
pub use graph::{big_degree_count, build_graph, degree_profile, square, Graph};
pub use metrics::{degeneracy_ordering, densest_subgraph, mad, verify_ordering, Ordering};
pub use rational::Rational;
