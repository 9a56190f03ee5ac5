//! Closed-form dimension predictors, evaluated from family parameters or
//! from recognized structure. This layer never consults the exact solvers;
//! that independence is what makes a disagreement between the two meaningful.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::classify::{diam3_partition, recognize_lewis, Diam3Outcome};
use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graph::{blocks, components, is_clique, Graph};
use crate::twins::twin_partition;

/// Which closed-form statement produced a prediction. The serialized tags
/// are part of the report schema and must not change.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoremTag {
    /// dim = n/2 for a connected non-complete regular graph of even order.
    #[serde(rename = "T3_1")]
    Regular,
    /// dim = n - 3 for two complete blocks sharing a cut vertex.
    #[serde(rename = "T3_2")]
    TwoBlocks,
    /// dim = n - 3 (|rho1| = 1) or n - 4 for the diameter-3 cut shape.
    #[serde(rename = "T3_5")]
    Diam3Cut,
    /// dim from the star-forest complement counts (n1, n2, s).
    #[serde(rename = "T3_4")]
    LewisStars,
    /// b = dim = adim = n - r when every vertex has a twin.
    #[serde(rename = "T5_TWIN")]
    AllTwins,
    /// Classical characterizations: path, complete, the three n-2 forms,
    /// cycle.
    #[serde(rename = "CHARTRAND")]
    Chartrand,
}

impl TheoremTag {
    pub fn as_str(self) -> &'static str {
        match self {
            TheoremTag::Regular => "T3_1",
            TheoremTag::TwoBlocks => "T3_2",
            TheoremTag::Diam3Cut => "T3_5",
            TheoremTag::LewisStars => "T3_4",
            TheoremTag::AllTwins => "T5_TWIN",
            TheoremTag::Chartrand => "CHARTRAND",
        }
    }
}

impl fmt::Display for TheoremTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub source: TheoremTag,
    pub value: usize,
    pub note: String,
}

impl Prediction {
    fn new(source: TheoremTag, value: usize, note: impl Into<String>) -> Prediction {
        Prediction { source, value, note: note.into() }
    }
}

/// Family-parameter predictor. Fixtures carry no parameters, so they get
/// None; use structural_predictions on the built graph instead.
pub fn predict(spec: &FamilySpec) -> Option<Prediction> {
    match spec {
        FamilySpec::Cocktail { n } => Some(Prediction::new(
            TheoremTag::Regular,
            n / 2,
            format!("non-complete regular graph on {n} vertices"),
        )),
        FamilySpec::TwoClique { n, m } => Some(Prediction::new(
            TheoremTag::TwoBlocks,
            n - 3,
            format!("complete blocks of sizes {} and {} share a cut vertex", m + 1, n - m),
        )),
        FamilySpec::Diam3 { n1, n3, n4 } => {
            let n = n1 + 1 + n3 + n4;
            let value = if *n1 == 1 { n - 3 } else { n - 4 };
            Some(Prediction::new(
                TheoremTag::Diam3Cut,
                value,
                format!("diameter-3 cut shape with |rho1| = {n1}"),
            ))
        }
        FamilySpec::Lewis { n1, leaf_counts } => {
            let n2: usize = leaf_counts.iter().sum();
            let s = leaf_counts.iter().filter(|&&c| c >= 2).count();
            Some(Prediction::new(
                TheoremTag::LewisStars,
                lewis_value(*n1, n2, s),
                format!("star-forest complement with n1 = {n1}, n2 = {n2}, s = {s}"),
            ))
        }
        FamilySpec::Fixture(_) => None,
    }
}

fn lewis_value(n1: usize, n2: usize, s: usize) -> usize {
    // n2 >= 2s since every counted star has at least two leaves.
    if n1 > 0 {
        n1 + n2 - s - 1
    } else {
        n2 - s
    }
}

/// n - r when no twin class is a singleton; r = number of classes. The
/// value then pins all three of base size, dim, and adim.
pub fn twin_formula(g: &Graph) -> Result<Option<Prediction>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let tp = twin_partition(g);
    if tp.has_singleton() {
        return Ok(None);
    }
    let r = tp.class_count();
    Ok(Some(Prediction::new(
        TheoremTag::AllTwins,
        g.vertex_count() - r,
        format!("every vertex is twinned; {r} twin classes"),
    )))
}

fn is_path_graph(g: &Graph) -> bool {
    let n = g.vertex_count();
    n >= 2 && g.is_connected() && g.edge_count() == n - 1 && (0..n).all(|v| g.degree(v) <= 2)
}

fn is_cycle_graph(g: &Graph) -> bool {
    g.vertex_count() >= 3 && g.is_connected() && (0..g.vertex_count()).all(|v| g.degree(v) == 2)
}

/// The classical exact characterizations: paths (1), complete graphs
/// (n-1), and for n >= 4 the three shapes with dimension n-2: complete
/// bipartite, a clique joined to an empty graph, and a clique joined to
/// one isolated vertex plus a clique. Cycles (2) come last; all overlaps
/// among these agree on the value. None means no covered shape matched.
pub fn chartrand_dimension(g: &Graph) -> Result<Option<Prediction>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    if n < 2 {
        return Ok(None);
    }
    let hit = |value, note: String| Ok(Some(Prediction::new(TheoremTag::Chartrand, value, note)));
    if is_path_graph(g) {
        return hit(1, "path".into());
    }
    if g.is_complete() {
        return hit(n - 1, "complete".into());
    }
    if n >= 4 {
        // Complete bipartite: complement is exactly two cliques.
        let h = g.complement();
        let comps = components(&h);
        if comps.len() == 2 && comps.iter().all(|c| is_clique(&h, c)) {
            return hit(
                n - 2,
                format!(
                    "complete bipartite with parts of sizes {} and {}",
                    comps[0].len(),
                    comps[1].len()
                ),
            );
        }
        // Join forms: peel off the universal vertices and look at the rest.
        let universal_count = (0..n).filter(|&v| g.degree(v) == n - 1).count();
        if universal_count > 0 {
            let rest: Vec<usize> = (0..n).filter(|&v| g.degree(v) < n - 1).collect();
            let rg = g.induced(&rest)?;
            if rest.len() >= 2 && rg.edge_count() == 0 {
                return hit(
                    n - 2,
                    format!("{universal_count}-clique joined to {} isolated vertices", rest.len()),
                );
            }
            let rcomps = components(&rg);
            if rcomps.len() == 2
                && rcomps.iter().any(|c| c.len() == 1)
                && rcomps.iter().all(|c| is_clique(&rg, c))
            {
                return hit(
                    n - 2,
                    format!("{universal_count}-clique joined to an isolated vertex plus a clique"),
                );
            }
        }
    }
    if is_cycle_graph(g) {
        return hit(2, "cycle".into());
    }
    Ok(None)
}

/// Every predictor whose hypothesis the graph satisfies, in a fixed order.
/// Values are claims to be checked against the oracles, never truths.
pub fn structural_predictions(g: &Graph) -> Result<Vec<Prediction>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    let mut out = Vec::new();

    if n >= 4 && g.is_regular() && !g.is_complete() && g.degree(0) == n - 2 {
        out.push(Prediction::new(
            TheoremTag::Regular,
            n / 2,
            format!("non-complete regular graph on {n} vertices"),
        ));
    }

    if n >= 4 {
        let bs = blocks(g)?;
        if bs.len() == 2 && bs.iter().all(|b| is_clique(g, b)) {
            out.push(Prediction::new(
                TheoremTag::TwoBlocks,
                n - 3,
                format!(
                    "complete blocks of sizes {} and {} share a cut vertex",
                    bs[0].len(),
                    bs[1].len()
                ),
            ));
        }
    }

    if let Diam3Outcome::Partition(p) = diam3_partition(g)? {
        if p.rho2.len() == 1 {
            let value = if p.rho1.len() == 1 { n - 3 } else { n - 4 };
            out.push(Prediction::new(
                TheoremTag::Diam3Cut,
                value,
                format!("diameter-3 cut shape with |rho1| = {}", p.rho1.len()),
            ));
        }
    }

    if let Some(ls) = recognize_lewis(g) {
        if !ls.stars.is_empty() {
            let (n1, n2, s) = (ls.n1(), ls.n2(), ls.big_star_count());
            out.push(Prediction::new(
                TheoremTag::LewisStars,
                lewis_value(n1, n2, s),
                format!("star-forest complement with n1 = {n1}, n2 = {n2}, s = {s}"),
            ));
        }
    }

    if let Some(p) = twin_formula(g)? {
        out.push(p);
    }
    if let Some(p) = chartrand_dimension(g)? {
        out.push(p);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cocktail_party, fixture, two_clique_cut, FixtureId};

    fn values(ps: &[Prediction]) -> Vec<(TheoremTag, usize)> {
        ps.iter().map(|p| (p.source, p.value)).collect()
    }

    #[test]
    fn family_predictions_are_literal_formulas() {
        let p = predict(&FamilySpec::Cocktail { n: 6 }).unwrap();
        assert_eq!((p.source, p.value), (TheoremTag::Regular, 3));
        let p = predict(&FamilySpec::TwoClique { n: 6, m: 2 }).unwrap();
        assert_eq!((p.source, p.value), (TheoremTag::TwoBlocks, 3));
        // The formula still claims n-3 at m=1; the oracle refutes it there.
        let p = predict(&FamilySpec::TwoClique { n: 5, m: 1 }).unwrap();
        assert_eq!((p.source, p.value), (TheoremTag::TwoBlocks, 2));
        let p = predict(&FamilySpec::Diam3 { n1: 1, n3: 3, n4: 1 }).unwrap();
        assert_eq!((p.source, p.value), (TheoremTag::Diam3Cut, 3));
        let p = predict(&FamilySpec::Diam3 { n1: 2, n3: 3, n4: 1 }).unwrap();
        assert_eq!((p.source, p.value), (TheoremTag::Diam3Cut, 3));
        let p = predict(&FamilySpec::Lewis { n1: 1, leaf_counts: vec![2, 1] }).unwrap();
        assert_eq!((p.source, p.value), (TheoremTag::LewisStars, 2));
        let p = predict(&FamilySpec::Lewis { n1: 0, leaf_counts: vec![2, 2] }).unwrap();
        assert_eq!((p.source, p.value), (TheoremTag::LewisStars, 2));
        assert_eq!(predict(&FamilySpec::Fixture(FixtureId::Diam3)), None);
    }

    #[test]
    fn twin_formula_needs_full_cover() {
        let p = twin_formula(&cocktail_party(10).unwrap()).unwrap().unwrap();
        assert_eq!((p.source, p.value), (TheoremTag::AllTwins, 5));
        let p = twin_formula(&Graph::complete(6).unwrap()).unwrap().unwrap();
        assert_eq!(p.value, 5);
        // v4 of the two-block figure is a singleton class.
        assert_eq!(twin_formula(&fixture(FixtureId::TwoBlock)).unwrap(), None);
        assert_eq!(twin_formula(&Graph::path(4).unwrap()).unwrap(), None);
        let split = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(twin_formula(&split), Err(Error::Disconnected));
    }

    #[test]
    fn chartrand_covers_the_classical_shapes() {
        let val = |g: &Graph| chartrand_dimension(g).unwrap().map(|p| p.value);
        assert_eq!(val(&Graph::path(9).unwrap()), Some(1));
        assert_eq!(val(&Graph::complete(5).unwrap()), Some(4));
        assert_eq!(val(&Graph::cycle(6).unwrap()), Some(2));
        assert_eq!(val(&Graph::cycle(5).unwrap()), Some(2));
        // K_{2,3}.
        let k23 = Graph::from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let p = chartrand_dimension(&k23).unwrap().unwrap();
        assert_eq!(p.value, 3);
        assert!(p.note.contains("bipartite"));
        // 2-clique joined to 3 isolated vertices.
        let join =
            Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let p = chartrand_dimension(&join).unwrap().unwrap();
        assert_eq!(p.value, 3);
        assert!(p.note.contains("isolated vertices"));
        // Paw: 1-clique joined to an isolated vertex plus an edge.
        let paw = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (2, 3)]).unwrap();
        assert_eq!(val(&paw), Some(2));
        // Cut shape at m=1 is a covered join form.
        let p = chartrand_dimension(&two_clique_cut(5, 1).unwrap()).unwrap().unwrap();
        assert_eq!(p.value, 3);
        assert!(p.note.contains("isolated vertex plus a clique"));
        // Not covered: two triangles sharing a vertex, or the diam-3 figure.
        let bowtie =
            Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(val(&bowtie), None);
        assert_eq!(val(&fixture(FixtureId::Diam3)), None);
        assert_eq!(val(&Graph::complete(1).unwrap()), None);
        let split = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(chartrand_dimension(&split), Err(Error::Disconnected));
    }

    #[test]
    fn structural_predictions_fire_per_fixture() {
        // The complement of the regular fixture is a perfect matching, which
        // is also a star forest, so the star predictor fires with n2 = 3,
        // s = 0: the two formulas agree on this overlap.
        let ps = structural_predictions(&fixture(FixtureId::Regular)).unwrap();
        assert_eq!(
            values(&ps),
            vec![(TheoremTag::Regular, 3), (TheoremTag::LewisStars, 3), (TheoremTag::AllTwins, 3)]
        );
        let ps = structural_predictions(&fixture(FixtureId::TwoBlock)).unwrap();
        assert_eq!(values(&ps), vec![(TheoremTag::TwoBlocks, 3)]);
        let ps = structural_predictions(&fixture(FixtureId::Diam3)).unwrap();
        assert_eq!(values(&ps), vec![(TheoremTag::Diam3Cut, 3)]);
        let ps = structural_predictions(&fixture(FixtureId::Fitting)).unwrap();
        assert_eq!(values(&ps), vec![(TheoremTag::LewisStars, 2)]);
    }

    #[test]
    fn structural_predictions_overlap_consistently() {
        // K5: one twin class, the complete shape, and a starless complement.
        let ps = structural_predictions(&Graph::complete(5).unwrap()).unwrap();
        assert_eq!(values(&ps), vec![(TheoremTag::AllTwins, 4), (TheoremTag::Chartrand, 4)]);
        // The m=1 cut shape carries the n-3 claim, a star-complement claim
        // (its complement is one isolated vertex plus a 3-leaf star), and
        // the n-2 form; the first two disagree with the third.
        let ps = structural_predictions(&two_clique_cut(5, 1).unwrap()).unwrap();
        assert_eq!(
            values(&ps),
            vec![
                (TheoremTag::TwoBlocks, 2),
                (TheoremTag::LewisStars, 2),
                (TheoremTag::Chartrand, 3)
            ]
        );
    }

    #[test]
    fn serialized_tags_are_stable() {
        let tags: Vec<String> = [
            TheoremTag::Regular,
            TheoremTag::TwoBlocks,
            TheoremTag::Diam3Cut,
            TheoremTag::LewisStars,
            TheoremTag::AllTwins,
            TheoremTag::Chartrand,
        ]
        .iter()
        .map(|t| serde_json::to_string(t).unwrap())
        .collect();
        assert_eq!(
            tags,
            vec!["\"T3_1\"", "\"T3_2\"", "\"T3_5\"", "\"T3_4\"", "\"T5_TWIN\"", "\"CHARTRAND\""]
        );
        assert_eq!(TheoremTag::AllTwins.to_string(), "T5_TWIN");
        let back: TheoremTag = serde_json::from_str("\"T3_5\"").unwrap();
        assert_eq!(back, TheoremTag::Diam3Cut);
    }
}
