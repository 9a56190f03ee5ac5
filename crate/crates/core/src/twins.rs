//! Twin vertices: u, v are open twins when N(u) = N(v) (forces
//! non-adjacency) and closed twins when N[u] = N[v] (forces adjacency).
//! Being equal-or-twin is an equivalence relation and a class never mixes
//! the two kinds, so the partition groups by neighborhood signature.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwinType {
    None,
    Open,
    Closed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TwinKind {
    Open,
    Closed,
    Singleton,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwinClass {
    pub vertices: Vec<usize>,
    pub kind: TwinKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwinPartition {
    pub classes: Vec<TwinClass>,
}

pub fn twin_type(g: &Graph, u: usize, v: usize) -> Result<TwinType> {
    let n = g.vertex_count();
    if u >= n {
        return Err(Error::OutOfRange { vertex: u, n });
    }
    if v >= n {
        return Err(Error::OutOfRange { vertex: v, n });
    }
    if u == v {
        return Err(Error::SameVertex(u));
    }
    if g.neighbor_mask(u) == g.neighbor_mask(v) {
        Ok(TwinType::Open)
    } else if g.closed_neighbor_mask(u) == g.closed_neighbor_mask(v) {
        Ok(TwinType::Closed)
    } else {
        Ok(TwinType::None)
    }
}

/// Partition into maximal twin classes, ordered by smallest member.
pub fn twin_partition(g: &Graph) -> TwinPartition {
    let n = g.vertex_count();
    let mut assigned = vec![false; n];
    let mut classes = Vec::new();
    for v in 0..n {
        if assigned[v] {
            continue;
        }
        let open: Vec<usize> =
            (v..n).filter(|&u| !assigned[u] && g.neighbor_mask(u) == g.neighbor_mask(v)).collect();
        if open.len() > 1 {
            for &u in &open {
                assigned[u] = true;
            }
            classes.push(TwinClass { vertices: open, kind: TwinKind::Open });
            continue;
        }
        let closed: Vec<usize> = (v..n)
            .filter(|&u| !assigned[u] && g.closed_neighbor_mask(u) == g.closed_neighbor_mask(v))
            .collect();
        if closed.len() > 1 {
            for &u in &closed {
                assigned[u] = true;
            }
            classes.push(TwinClass { vertices: closed, kind: TwinKind::Closed });
            continue;
        }
        assigned[v] = true;
        classes.push(TwinClass { vertices: vec![v], kind: TwinKind::Singleton });
    }
    TwinPartition { classes }
}

impl TwinPartition {
    /// Sum of (class size - 1); any resolving set and any base must contain
    /// at least that many vertices.
    pub fn lower_bound(&self) -> usize {
        self.classes.iter().map(|c| c.vertices.len() - 1).sum()
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn has_singleton(&self) -> bool {
        self.classes.iter().any(|c| c.kind == TwinKind::Singleton)
    }

    /// All but the largest-index member of each class. Every resolving set
    /// and every base can be normalized (twin swaps are automorphisms) to
    /// contain this set, so the exact searches enumerate its supersets only.
    pub fn mandatory_core(&self) -> Vec<usize> {
        let mut core = Vec::new();
        for c in &self.classes {
            core.extend_from_slice(&c.vertices[..c.vertices.len() - 1]);
        }
        core.sort_unstable();
        core
    }
}

/// Convenience wrapper matching the partition method.
pub fn twin_lower_bound(tp: &TwinPartition) -> usize {
    tp.lower_bound()
}
