// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("header declares {declared} {what} but found {found}")]
    HeaderMismatch { what: &'static str, declared: usize, found: usize },
    #[error("ordering is not a permutation of 0..{n}: {reason}")]
    NotPermutation { n: usize, reason: String },
    #[error("vertex {0} has no color")]
    MissingColor(usize),
    #[error("correspondence on edge {u}-{v} is not a matching (color {color} used twice)")]
    NotAMatching { u: usize, v: usize, color: i64 },
    #[error("correspondence given for non-edge {0}-{1}")]
    CorrespondenceNonEdge(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown construction '{0}'")]
    UnknownConstruction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
