//! Undirected simple graphs on up to 64 vertices, adjacency kept as one
//! machine word per vertex.

use crate::error::{Error, Result};

/// Adjacency rows are u64 bitsets, so 64 is the hard cap.
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, Eq, PartialEq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Builds a graph from an explicit edge list. Rejects loops and
    /// out-of-range endpoints; duplicate edges collapse silently.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::BadVertexCount { n, cap: MAX_VERTICES });
        }
        let mut adj = vec![0u64; n];
        for (u, v) in edges {
            if u >= n {
                return Err(Error::OutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::OutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { n, adj })
    }

    pub fn empty(n: usize) -> Result<Graph> {
        Graph::from_edges(n, std::iter::empty())
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges)
    }

    pub fn path(n: usize) -> Result<Graph> {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::BadParameter(format!("cycle needs n >= 3, got {n}")));
        }
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Open neighborhood of `v` as a bitset.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Closed neighborhood of `v` as a bitset.
    pub fn closed_neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v] | 1 << v
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let mut mask = self.adj[v];
        std::iter::from_fn(move || {
            if mask == 0 {
                None
            } else {
                let i = mask.trailing_zeros() as usize;
                mask &= mask - 1;
                Some(i)
            }
        })
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as (u, v) with u < v, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adjacent(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Complement on the same vertex set.
    pub fn complement(&self) -> Graph {
        let mask = self.full_mask();
        let adj = (0..self.n).map(|v| !self.adj[v] & mask & !(1 << v)).collect();
        Graph { n: self.n, adj }
    }

    /// Induced subgraph; vertex i of the result is vs[i]. Entries must be
    /// distinct and in range.
    pub fn induced(&self, vs: &[usize]) -> Result<Graph> {
        let mut seen = 0u64;
        for &v in vs {
            if v >= self.n {
                return Err(Error::OutOfRange { vertex: v, n: self.n });
            }
            if seen >> v & 1 == 1 {
                return Err(Error::BadParameter(format!("duplicate vertex {v} in induced set")));
            }
            seen |= 1 << v;
        }
        let mut edges = Vec::new();
        for (i, &u) in vs.iter().enumerate() {
            for (j, &v) in vs.iter().enumerate().skip(i + 1) {
                if self.adjacent(u, v) {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(vs.len(), edges)
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == self.n - 1)
    }

    pub fn is_regular(&self) -> bool {
        (1..self.n).all(|v| self.degree(v) == self.degree(0))
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            let mut m = frontier;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == self.full_mask()
    }

    /// Display label used by the reference figures: vertex i prints as v(i+1).
    pub fn vertex_label(i: usize) -> String {
        format!("v{}", i + 1)
    }
}

/// All-pairs shortest path lengths; `None` marks an unreachable pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<Option<u32>>,
}

impl DistanceMatrix {
    pub fn new(g: &Graph) -> DistanceMatrix {
        let n = g.vertex_count();
        let mut d = vec![None; n * n];
        for s in 0..n {
            let mut seen = 1u64 << s;
            let mut frontier = 1u64 << s;
            let mut dist = 0u32;
            while frontier != 0 {
                let mut m = frontier;
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    m &= m - 1;
                    d[s * n + v] = Some(dist);
                }
                let mut next = 0u64;
                m = frontier;
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    m &= m - 1;
                    next |= g.neighbor_mask(v);
                }
                frontier = next & !seen;
                seen |= next;
                dist += 1;
            }
        }
        DistanceMatrix { n, d }
    }

    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        self.d[u * self.n + v]
    }

    pub fn is_connected(&self) -> bool {
        self.d.iter().all(|x| x.is_some())
    }

    /// `None` when some pair is unreachable.
    pub fn diameter(&self) -> Option<u32> {
        let mut max = 0;
        for x in &self.d {
            max = max.max((*x)?);
        }
        Some(max)
    }
}

/// Eccentricity-maximum over all pairs, `None` for disconnected input.
pub fn diameter(g: &Graph) -> Option<u32> {
    DistanceMatrix::new(g).diameter()
}

/// Cut vertices via one DFS with low-links. Works per component, so
/// disconnected input is fine.
/// Connected components, each sorted ascending, ordered by smallest member.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < comp.len() {
            for u in g.neighbors(comp[i]) {
                if !seen[u] {
                    seen[u] = true;
                    comp.push(u);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// True when every pair in vs is adjacent (vacuously for fewer than 2).
pub fn is_clique(g: &Graph, vs: &[usize]) -> bool {
    vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.adjacent(u, v)))
}

pub fn cut_vertices(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut depth = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];

    // Iterative DFS; the stack holds (vertex, parent, neighbor cursor).
    for root in 0..n {
        if depth[root] != usize::MAX {
            continue;
        }
        let mut root_children = 0usize;
        let mut stack: Vec<(usize, usize, Vec<usize>, usize)> = Vec::new();
        depth[root] = 0;
        low[root] = 0;
        stack.push((root, usize::MAX, g.neighbors(root).collect(), 0));
        while let Some((v, parent, nbrs, cursor)) = stack.pop() {
            if cursor < nbrs.len() {
                let w = nbrs[cursor];
                stack.push((v, parent, nbrs, cursor + 1));
                if depth[w] == usize::MAX {
                    depth[w] = depth[v] + 1;
                    low[w] = depth[w];
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, g.neighbors(w).collect(), 0));
                } else if w != parent {
                    low[v] = low[v].min(depth[w]);
                }
            } else if let Some(&(p, _, _, _)) = stack.last() {
                low[p] = low[p].min(low[v]);
                if p != root && low[v] >= depth[p] {
                    is_cut[p] = true;
                }
            }
        }
        if root_children >= 2 {
            is_cut[root] = true;
        }
    }
    (0..n).filter(|&v| is_cut[v]).collect()
}

/// Block decomposition (maximal subgraphs without a cut vertex), as vertex
/// sets. Follows the usual edge-stack construction, so an isolated vertex
/// yields no block and two blocks share at most one vertex.
pub fn blocks(g: &Graph) -> Result<Vec<Vec<usize>>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    let mut depth = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut out: Vec<Vec<usize>> = Vec::new();

    let pop_component = |edge_stack: &mut Vec<(usize, usize)>, until: (usize, usize)| {
        let mut members = 0u64;
        while let Some(e) = edge_stack.pop() {
            members |= 1 << e.0;
            members |= 1 << e.1;
            if e == until {
                break;
            }
        }
        let mut vs = Vec::new();
        let mut m = members;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            vs.push(v);
        }
        vs
    };

    depth[0] = 0;
    low[0] = 0;
    let mut stack: Vec<(usize, usize, Vec<usize>, usize)> =
        vec![(0, usize::MAX, g.neighbors(0).collect(), 0)];
    while let Some((v, parent, nbrs, cursor)) = stack.pop() {
        if cursor < nbrs.len() {
            let w = nbrs[cursor];
            stack.push((v, parent, nbrs, cursor + 1));
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                low[w] = depth[w];
                edge_stack.push((v, w));
                stack.push((w, v, g.neighbors(w).collect(), 0));
            } else if w != parent && depth[w] < depth[v] {
                edge_stack.push((v, w));
                low[v] = low[v].min(depth[w]);
            }
        } else if let Some(&(p, _, _, _)) = stack.last() {
            low[p] = low[p].min(low[v]);
            if low[v] >= depth[p] {
                out.push(pop_component(&mut edge_stack, (p, v)));
            }
        }
    }
    for b in &mut out {
        b.sort_unstable();
    }
    out.sort();
    Ok(out)
}
