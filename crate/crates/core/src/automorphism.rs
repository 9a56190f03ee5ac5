//! Automorphism enumeration by backtracking over a degree-and-distance
//! signature refinement. Signatures only prune candidate images; the
//! pairwise adjacency checks during assignment are what make each emitted
//! permutation an automorphism.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::subsets::first_combination;
use crate::twins::twin_partition;

/// Full enumeration cap on vertices.
pub const AUT_VERTEX_CAP: usize = 12;
/// Bail-out for pathologically large groups (e.g. near-complete graphs at
/// the vertex cap), since the group is materialized as a full element list.
pub const AUT_ELEMENT_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Permutation {
        Permutation(images)
    }

    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// (self . other)(v) = self(other(v)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&v| self.0[v]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Permutation(inv)
    }

    pub fn preserves(&self, g: &Graph) -> bool {
        let n = g.vertex_count();
        (0..n).all(|u| (u + 1..n).all(|v| g.adjacent(u, v) == g.adjacent(self.0[u], self.0[v])))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutGroup {
    elements: Vec<Permutation>,
}

impl AutGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// First non-identity element fixing every vertex of `set`, if any.
    pub fn pointwise_stabilizer_witness(&self, set: &[usize]) -> Option<&Permutation> {
        self.elements.iter().find(|p| !p.is_identity() && set.iter().all(|&v| p.apply(v) == v))
    }
}

fn signatures(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.vertex_count();
    let dm = DistanceMatrix::new(g);
    (0..n)
        .map(|v| {
            let mut sig = vec![g.degree(v) as u32];
            let mut nbr: Vec<u32> = g.neighbors(v).map(|u| g.degree(u) as u32).collect();
            nbr.sort_unstable();
            sig.extend(nbr);
            let mut dist: Vec<u32> = (0..n).map(|u| dm.get(v, u).map_or(u32::MAX, |d| d)).collect();
            dist.sort_unstable();
            sig.extend(dist);
            sig
        })
        .collect()
}

/// Every automorphism, in lexicographic order of image arrays.
pub fn automorphisms(g: &Graph) -> Result<AutGroup> {
    let n = g.vertex_count();
    if n > AUT_VERTEX_CAP {
        return Err(Error::BudgetExceeded(format!(
            "automorphism enumeration handles n <= {AUT_VERTEX_CAP}, got n = {n}"
        )));
    }
    let sig = signatures(g);
    let candidates: Vec<Vec<usize>> =
        (0..n).map(|v| (0..n).filter(|&u| sig[u] == sig[v]).collect()).collect();

    let mut elements = Vec::new();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn extend(
        g: &Graph,
        candidates: &[Vec<usize>],
        v: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        elements: &mut Vec<Permutation>,
    ) -> Result<()> {
        let n = g.vertex_count();
        if v == n {
            if elements.len() == AUT_ELEMENT_CAP {
                return Err(Error::BudgetExceeded(format!(
                    "automorphism group exceeds {AUT_ELEMENT_CAP} elements"
                )));
            }
            elements.push(Permutation::from_images(image.clone()));
            return Ok(());
        }
        for &u in &candidates[v] {
            if used[u] {
                continue;
            }
            if (0..v).all(|w| g.adjacent(w, v) == g.adjacent(image[w], u)) {
                image[v] = u;
                used[u] = true;
                extend(g, candidates, v + 1, image, used, elements)?;
                image[v] = usize::MAX;
                used[u] = false;
            }
        }
        Ok(())
    }

    extend(g, &candidates, 0, &mut image, &mut used, &mut elements)?;
    Ok(AutGroup { elements })
}

/// True when the pointwise stabilizer of `set` is trivial.
pub fn is_base(g: &Graph, set: &[usize]) -> Result<bool> {
    let n = g.vertex_count();
    for &v in set {
        if v >= n {
            return Err(Error::OutOfRange { vertex: v, n });
        }
    }
    let group = automorphisms(g)?;
    Ok(group.pointwise_stabilizer_witness(set).is_none())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BaseResult {
    pub size: usize,
    pub witness: Vec<usize>,
}

/// Smallest base, searched exactly like the dimension solvers: supersets of
/// the mandatory twin core in increasing size, lexicographic within a size
/// (twin swaps are automorphisms, so a base too needs all but one of each
/// twin class, and the same exchange argument keeps lex-minimality).
pub fn base_size(g: &Graph) -> Result<BaseResult> {
    let n = g.vertex_count();
    let group = automorphisms(g)?;
    let core = twin_partition(g).mandatory_core();
    let free: Vec<usize> = (0..n).filter(|v| !core.contains(v)).collect();
    for extra in 0..=free.len() {
        let mut candidate = Vec::with_capacity(core.len() + extra);
        if let Some(witness) = first_combination(&free, extra, |chosen| {
            candidate.clear();
            candidate.extend_from_slice(&core);
            candidate.extend_from_slice(chosen);
            candidate.sort_unstable();
            group.pointwise_stabilizer_witness(&candidate).is_none().then(|| candidate.clone())
        }) {
            return Ok(BaseResult { size: witness.len(), witness });
        }
    }
    unreachable!("the full vertex set is always a base");
}
