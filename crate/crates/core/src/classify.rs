//! Structure recognizers feeding the closed-form predictors. Each one
//! either certifies its hypothesis or reports non-applicability; none of
//! them guesses.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{blocks, cut_vertices, is_clique, DistanceMatrix, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Star {
    pub center: usize,
    pub leaves: Vec<usize>,
}

/// Decomposition of the complement into isolated vertices (the universal
/// set of the graph itself) plus a star forest.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LewisStructure {
    pub universal: Vec<usize>,
    pub stars: Vec<Star>,
}

impl LewisStructure {
    pub fn n1(&self) -> usize {
        self.universal.len()
    }

    /// Total leaf count over all stars.
    pub fn n2(&self) -> usize {
        self.stars.iter().map(|s| s.leaves.len()).sum()
    }

    pub fn n3(&self) -> usize {
        self.stars.len()
    }

    /// Number of stars with at least two leaves.
    pub fn big_star_count(&self) -> usize {
        self.stars.iter().filter(|s| s.leaves.len() >= 2).count()
    }
}

/// Tests whether the complement is isolated vertices plus a star forest.
/// In a two-vertex complement component the smaller index is the center.
pub fn recognize_lewis(g: &Graph) -> Option<LewisStructure> {
    let n = g.vertex_count();
    let h = g.complement();
    let universal: Vec<usize> = (0..n).filter(|&v| g.degree(v) == n - 1).collect();
    let mut seen = vec![false; n];
    for &v in &universal {
        seen[v] = true;
    }
    let mut stars = Vec::new();
    for v in 0..n {
        if seen[v] {
            continue;
        }
        // Collect v's complement component.
        let mut comp = vec![v];
        seen[v] = true;
        let mut idx = 0;
        while idx < comp.len() {
            for u in h.neighbors(comp[idx]) {
                if !seen[u] {
                    seen[u] = true;
                    comp.push(u);
                }
            }
            idx += 1;
        }
        comp.sort_unstable();
        let c = comp.len();
        let center = if c == 2 {
            comp[0]
        } else {
            let centers: Vec<usize> =
                comp.iter().copied().filter(|&u| h.degree(u) == c - 1).collect();
            match centers.as_slice() {
                [only] => *only,
                _ => return None,
            }
        };
        if comp.iter().any(|&u| u != center && h.degree(u) != 1) {
            return None;
        }
        let leaves: Vec<usize> = comp.into_iter().filter(|&u| u != center).collect();
        stars.push(Star { center, leaves });
    }
    stars.sort_by_key(|s| s.center);
    Some(LewisStructure { universal, stars })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diam3Partition {
    pub anchor: usize,
    pub rho1: Vec<usize>,
    pub rho2: Vec<usize>,
    pub rho3: Vec<usize>,
    pub rho4: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Diam3Outcome {
    Partition(Diam3Partition),
    /// Names the first invariant that failed.
    NotDiam3 {
        reason: String,
    },
}

/// Builds the distance partition from the smallest-index vertex having an
/// eccentricity-3 partner, then validates the clique and separation
/// invariants. Anchor choice is deterministic but a different anchor could
/// partition differently; callers only rely on the validated shape.
pub fn diam3_partition(g: &Graph) -> Result<Diam3Outcome> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let dm = DistanceMatrix::new(g);
    if dm.diameter() != Some(3) {
        return Ok(Diam3Outcome::NotDiam3 { reason: "diameter is not 3".into() });
    }
    let n = g.vertex_count();
    let anchor = (0..n)
        .find(|&r| (0..n).any(|s| dm.get(r, s) == Some(3)))
        .expect("diameter 3 guarantees an anchor");

    let at = |d: u32| -> Vec<usize> { (0..n).filter(|&v| dm.get(anchor, v) == Some(d)).collect() };
    let rho3 = at(2);
    let rho4 = at(3);
    let has_rho3_neighbor = |v: usize| -> bool { rho3.iter().any(|&w| g.adjacent(v, w)) };
    let mut rho1 = vec![anchor];
    let mut rho2 = Vec::new();
    for v in at(1) {
        if has_rho3_neighbor(v) {
            rho2.push(v);
        } else {
            rho1.push(v);
        }
    }
    rho1.sort_unstable();

    let fail = |reason: &str| Ok(Diam3Outcome::NotDiam3 { reason: reason.to_string() });
    if rho3.len() < 3 {
        return fail("rho3 has fewer than 3 vertices");
    }
    let rho12: Vec<usize> = rho1.iter().chain(&rho2).copied().collect();
    if !is_clique(g, &rho12) {
        return fail("rho1 + rho2 is not a clique");
    }
    let rho34: Vec<usize> = rho3.iter().chain(&rho4).copied().collect();
    if !is_clique(g, &rho34) {
        return fail("rho3 + rho4 is not a clique");
    }
    if rho1.iter().any(|&u| rho34.iter().any(|&v| g.adjacent(u, v))) {
        return fail("rho1 touches rho3 + rho4");
    }
    if rho4.iter().any(|&u| rho2.iter().any(|&v| g.adjacent(u, v))) {
        return fail("rho4 touches rho2");
    }
    if !rho3.iter().all(|&w| rho2.iter().any(|&v| g.adjacent(v, w))) {
        return fail("some rho3 vertex has no rho2 neighbor");
    }
    Ok(Diam3Outcome::Partition(Diam3Partition { anchor, rho1, rho2, rho3, rho4 }))
}

/// Three-valued: Some(true)/Some(false) when the hypotheses hold (connected,
/// n >= 3, diameter <= 2, not itself a block), None otherwise.
pub fn check_blocks_complete(g: &Graph) -> Result<Option<bool>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    if n < 3 {
        return Ok(None);
    }
    match DistanceMatrix::new(g).diameter() {
        Some(d) if d <= 2 => {}
        _ => return Ok(None),
    }
    if cut_vertices(g).is_empty() {
        return Ok(None);
    }
    let all_complete = blocks(g)?.iter().all(|b| is_clique(g, b));
    Ok(Some(all_complete))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CutVertexStatus {
    None,
    Unique(usize),
    Multiple(Vec<usize>),
}

pub fn unique_cut_vertex(g: &Graph) -> Result<CutVertexStatus> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let cuts = cut_vertices(g);
    Ok(match cuts.as_slice() {
        [] => CutVertexStatus::None,
        [v] => CutVertexStatus::Unique(*v),
        _ => CutVertexStatus::Multiple(cuts),
    })
}

/// A regular graph fits the family constraints only if it is complete or
/// (n-2)-regular.
pub fn regular_cdg_admissible(g: &Graph) -> Result<bool> {
    if !g.is_regular() {
        return Err(Error::NotRegular);
    }
    let n = g.vertex_count();
    Ok(g.is_complete() || g.degree(0) == n - 2)
}
