// SPDX-License-Identifier: Apache-2.0

use serde::Serialize;

use crate::graph::{degree_profile, DegreeEntry, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassKind {
    Bad,
    #[serde(rename = "weakly_bad_1")]
    WeaklyBad1,
    #[serde(rename = "weakly_bad_2")]
    WeaklyBad2,
    WeaklyGood,
    Good,
    Other,
}

/// Class of a vertex by `d - d2` and `d3`. Vertices of degree at most 3 are
/// always `Other` with `small_degree` set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VertexClass {
    pub class: ClassKind,
    pub nice: bool,
    pub small_degree: bool,
}

impl VertexClass {
    pub fn of(e: DegreeEntry) -> VertexClass {
        if e.d <= 3 {
            return VertexClass { class: ClassKind::Other, nice: false, small_degree: true };
        }
        let rest = e.d - e.d2;
        let class = match (rest, e.d3) {
            (3, _) => ClassKind::Bad,
            (4, 0) => ClassKind::WeaklyBad1,
            (4, 1) => ClassKind::WeaklyBad2,
            (5, _) => ClassKind::WeaklyGood,
            (r, _) if r >= 6 => ClassKind::Good,
            _ => ClassKind::Other,
        };
        VertexClass { class, nice: rest >= 8, small_degree: false }
    }

    pub fn is_bad(&self) -> bool {
        self.class == ClassKind::Bad
    }

    pub fn is_good(&self) -> bool {
        self.class == ClassKind::Good
    }

    pub fn is_weakly_bad(&self) -> bool {
        matches!(self.class, ClassKind::WeaklyBad1 | ClassKind::WeaklyBad2)
    }
}

pub fn classify_vertices(g: &Graph) -> Vec<VertexClass> {
    degree_profile(g).entries.into_iter().map(VertexClass::of).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class(d: usize, d2: usize, d3: usize) -> VertexClass {
        VertexClass::of(DegreeEntry { d, d2, d3 })
    }

    #[test]
    fn definition_cases() {
        assert_eq!(class(5, 2, 0).class, ClassKind::Bad);
        let c = class(9, 1, 0);
        assert_eq!((c.class, c.nice), (ClassKind::Good, true));
        assert_eq!(class(4, 0, 1).class, ClassKind::WeaklyBad2);
        assert_eq!(class(6, 2, 0).class, ClassKind::WeaklyBad1);
        assert_eq!(class(6, 2, 2).class, ClassKind::Other);
        assert_eq!(class(7, 2, 4).class, ClassKind::WeaklyGood);
        assert_eq!(class(4, 2, 0).class, ClassKind::Other);
        assert!(class(3, 0, 0).small_degree);
        assert!(!class(7, 0, 0).nice);
    }
}
