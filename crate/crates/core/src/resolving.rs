//! Resolving sets and the two dimensions.
//!
//! METRIC mode uses shortest-path distances and requires a connected graph;
//! ADJACENCY mode replaces every distance by 0 (same vertex), 1 (adjacent)
//! or 2 (anything else), so it tolerates disconnected input.
//!
//! The exact searches enumerate supersets of the mandatory twin core in
//! increasing size and, within a size, in lexicographic order of the sorted
//! landmark list, so the returned witness is the lexicographically smallest
//! minimum one.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::subsets::first_combination;
use crate::twins::twin_partition;

/// Exhaustive search cap for both dimensions.
pub const DIMENSION_VERTEX_CAP: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Mode {
    Metric,
    Adjacency,
}

/// Distance table specialized per mode; rows[v][u] is the coordinate of v
/// with respect to landmark u.
pub(crate) struct LandmarkSpace {
    rows: Vec<Vec<u32>>,
}

impl LandmarkSpace {
    pub(crate) fn new(g: &Graph, mode: Mode) -> Result<LandmarkSpace> {
        let n = g.vertex_count();
        let rows = match mode {
            Mode::Metric => {
                let dm = DistanceMatrix::new(g);
                if !dm.is_connected() {
                    return Err(Error::Disconnected);
                }
                (0..n).map(|v| (0..n).map(|u| dm.get(v, u).unwrap()).collect()).collect()
            }
            Mode::Adjacency => (0..n)
                .map(|v| {
                    (0..n)
                        .map(|u| {
                            if u == v {
                                0
                            } else if g.adjacent(u, v) {
                                1
                            } else {
                                2
                            }
                        })
                        .collect()
                })
                .collect(),
        };
        Ok(LandmarkSpace { rows })
    }

    fn separated(&self, u: usize, v: usize, w: usize) -> bool {
        self.rows[u][w] != self.rows[v][w]
    }

    pub(crate) fn resolves(&self, landmarks: &[usize]) -> bool {
        self.first_collision(landmarks).is_none()
    }

    /// First colliding pair in lexicographic (u, v) order, if any.
    pub(crate) fn first_collision(&self, landmarks: &[usize]) -> Option<(usize, usize)> {
        let n = self.rows.len();
        for u in 0..n {
            for v in u + 1..n {
                if !landmarks.iter().any(|&w| self.separated(u, v, w)) {
                    return Some((u, v));
                }
            }
        }
        None
    }

    fn vector(&self, v: usize, landmarks: &[usize]) -> Vec<u32> {
        landmarks.iter().map(|&w| self.rows[v][w]).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MetricVector {
    pub landmarks: Vec<usize>,
    pub values: Vec<u32>,
}

/// Coordinate vector of `v` with respect to an ordered landmark list.
pub fn representation(
    g: &Graph,
    v: usize,
    landmarks: &[usize],
    mode: Mode,
) -> Result<MetricVector> {
    let n = g.vertex_count();
    if v >= n {
        return Err(Error::OutOfRange { vertex: v, n });
    }
    for &w in landmarks {
        if w >= n {
            return Err(Error::OutOfRange { vertex: w, n });
        }
    }
    let space = LandmarkSpace::new(g, mode)?;
    Ok(MetricVector { landmarks: landmarks.to_vec(), values: space.vector(v, landmarks) })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ResolveOutcome {
    Resolving,
    /// Lexicographically first pair with identical coordinate vectors.
    Collision(usize, usize),
}

pub fn is_resolving(g: &Graph, landmarks: &[usize], mode: Mode) -> Result<ResolveOutcome> {
    let n = g.vertex_count();
    for &w in landmarks {
        if w >= n {
            return Err(Error::OutOfRange { vertex: w, n });
        }
    }
    let space = LandmarkSpace::new(g, mode)?;
    Ok(match space.first_collision(landmarks) {
        None => ResolveOutcome::Resolving,
        Some((u, v)) => ResolveOutcome::Collision(u, v),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionResult {
    pub value: usize,
    pub witness: Vec<usize>,
    pub mode: Mode,
}

fn exact_dimension(g: &Graph, mode: Mode) -> Result<DimensionResult> {
    let n = g.vertex_count();
    if n > DIMENSION_VERTEX_CAP {
        return Err(Error::BudgetExceeded(format!(
            "dimension search handles n <= {DIMENSION_VERTEX_CAP}, got n = {n}"
        )));
    }
    let space = LandmarkSpace::new(g, mode)?;
    let core = twin_partition(g).mandatory_core();
    let free: Vec<usize> = (0..n).filter(|v| !core.contains(v)).collect();
    for extra in 0..=free.len() {
        let mut candidate = Vec::with_capacity(core.len() + extra);
        if let Some(witness) = first_combination(&free, extra, |chosen| {
            candidate.clear();
            candidate.extend_from_slice(&core);
            candidate.extend_from_slice(chosen);
            candidate.sort_unstable();
            space.resolves(&candidate).then(|| candidate.clone())
        }) {
            return Ok(DimensionResult { value: witness.len(), witness, mode });
        }
    }
    unreachable!("the full vertex set always resolves");
}

/// Minimum resolving set size under shortest-path distances.
pub fn metric_dimension(g: &Graph) -> Result<DimensionResult> {
    exact_dimension(g, Mode::Metric)
}

/// Minimum resolving set size under the 0/1/2 adjacency truncation.
pub fn adjacency_dimension(g: &Graph) -> Result<DimensionResult> {
    exact_dimension(g, Mode::Adjacency)
}

/// Greedy baseline: repeatedly add the landmark separating the most
/// still-colliding pairs, smallest index on ties. Always returns a valid
/// resolving set; its size is an upper bound for the exact dimension.
pub fn greedy_resolving_set(g: &Graph, mode: Mode) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    let space = LandmarkSpace::new(g, mode)?;
    let mut unsep: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut picked = Vec::new();
    let mut in_set = vec![false; n];
    while !unsep.is_empty() {
        let (best, _) = (0..n)
            .filter(|&w| !in_set[w])
            .map(|w| {
                let gain = unsep.iter().filter(|&&(u, v)| space.separated(u, v, w)).count();
                (w, gain)
            })
            .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
            .expect("an endpoint of an unresolved pair always separates it");
        picked.push(best);
        in_set[best] = true;
        unsep.retain(|&(u, v)| !space.separated(u, v, best));
    }
    picked.sort_unstable();
    Ok(picked)
}
