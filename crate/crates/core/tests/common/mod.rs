//! Independent re-implementations used only as test oracles: Floyd-
//! Warshall distances, unpruned subset scans, full permutation
//! enumeration. No bitset tricks, no twin pruning, no code shared with
//! the production solvers.

#![allow(dead_code)]
// Index-based loops are the point here: the oracles mirror textbook
// pseudocode instead of idiomatic iterator chains.
#![allow(clippy::needless_range_loop)]

use std::collections::HashSet;

use cdg_core::Graph;

pub fn fw_distances(g: &Graph) -> Vec<Vec<Option<u32>>> {
    let n = g.vertex_count();
    let mut d = vec![vec![None; n]; n];
    for v in 0..n {
        d[v][v] = Some(0);
    }
    for (u, v) in g.edges() {
        d[u][v] = Some(1);
        d[v][u] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// k-subsets of 0..n in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn coordinate(g: &Graph, d: &[Vec<Option<u32>>], v: usize, w: usize, adjacency: bool) -> u32 {
    if adjacency {
        if v == w {
            0
        } else if g.adjacent(v, w) {
            1
        } else {
            2
        }
    } else {
        d[v][w].expect("metric coordinates need a connected graph")
    }
}

pub fn brute_is_resolving(g: &Graph, set: &[usize], adjacency: bool) -> bool {
    let d = fw_distances(g);
    let mut seen = HashSet::new();
    (0..g.vertex_count()).all(|v| {
        seen.insert(set.iter().map(|&w| coordinate(g, &d, v, w, adjacency)).collect::<Vec<_>>())
    })
}

/// Smallest resolving set by scanning every subset, smallest size first,
/// lexicographic within a size.
pub fn brute_dimension(g: &Graph, adjacency: bool) -> (usize, Vec<usize>) {
    let n = g.vertex_count();
    for k in 0..=n {
        for combo in combinations(n, k) {
            if brute_is_resolving(g, &combo, adjacency) {
                return (k, combo);
            }
        }
    }
    unreachable!("the full vertex set always resolves");
}

/// True when no landmark set of the given size resolves the graph.
pub fn brute_no_set_of_size(g: &Graph, k: usize, adjacency: bool) -> bool {
    combinations(g.vertex_count(), k).into_iter().all(|c| !brute_is_resolving(g, &c, adjacency))
}

fn component_count(g: &Graph, skip: Option<usize>) -> usize {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    if let Some(v) = skip {
        seen[v] = true;
    }
    let mut count = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        count += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            for u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
    }
    count
}

/// Cut vertices by deletion and recount.
pub fn brute_cut_vertices(g: &Graph) -> Vec<usize> {
    let whole = component_count(g, None);
    (0..g.vertex_count()).filter(|&v| component_count(g, Some(v)) > whole).collect()
}

fn preserves(g: &Graph, p: &[usize]) -> bool {
    let n = g.vertex_count();
    (0..n).all(|u| (u + 1..n).all(|v| g.adjacent(u, v) == g.adjacent(p[u], p[v])))
}

/// Every automorphism, found by filtering all n! permutations. Output is
/// in lexicographic image order.
pub fn brute_automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    assert!(n <= 8, "factorial enumeration is for small graphs only");
    let mut out = Vec::new();
    let mut cur = Vec::new();
    let mut used = vec![false; n];
    fn rec(
        g: &Graph,
        n: usize,
        cur: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == n {
            if preserves(g, cur) {
                out.push(cur.clone());
            }
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(g, n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    rec(g, n, &mut cur, &mut used, &mut out);
    out
}

fn fixes_pointwise(p: &[usize], set: &[usize]) -> bool {
    set.iter().all(|&v| p[v] == v)
}

fn is_identity(p: &[usize]) -> bool {
    p.iter().enumerate().all(|(i, &v)| i == v)
}

/// Smallest set whose pointwise stabilizer is trivial, by subset scan
/// over the fully enumerated group.
pub fn brute_base(g: &Graph) -> (usize, Vec<usize>) {
    let auts = brute_automorphisms(g);
    let n = g.vertex_count();
    for k in 0..=n {
        for combo in combinations(n, k) {
            if auts.iter().all(|p| is_identity(p) || !fixes_pointwise(p, &combo)) {
                return (k, combo);
            }
        }
    }
    unreachable!("the full vertex set is always a base");
}

/// All labeled graphs on at most max_n vertices (75 of them for max_n = 4).
pub fn all_small_graphs(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            out.push(Graph::from_edges(n, edges).unwrap());
        }
    }
    out
}
