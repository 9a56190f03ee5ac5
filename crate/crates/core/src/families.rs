//! Graph families realizable as character degree graphs, plus the four
//! reference figures as exact fixtures.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Complete graph on even n minus the perfect matching (0,1), (2,3), ...
/// The result is (n-2)-regular.
pub fn cocktail_party(n: usize) -> Result<Graph> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::BadParameter(format!(
            "cocktail party graph needs even n >= 4, got {n}"
        )));
    }
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !(u % 2 == 0 && v == u + 1));
    Graph::from_edges(n, edges)
}

/// Two cliques glued through one universal cut vertex: vertices 0..m form
/// K_m, vertex m is the cut vertex, vertices m+1..n form K_{n-m-1}.
pub fn two_clique_cut(n: usize, m: usize) -> Result<Graph> {
    if n < 4 || m < 1 || m + m + 1 > n {
        return Err(Error::BadParameter(format!(
            "two-clique cut graph needs n >= 4 and 1 <= m <= n-m-1, got n={n}, m={m}"
        )));
    }
    let v = m;
    let mut edges = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            edges.push((a, b));
        }
        edges.push((a, v));
    }
    for a in m + 1..n {
        edges.push((v, a));
        for b in a + 1..n {
            edges.push((a, b));
        }
    }
    Graph::from_edges(n, edges)
}

/// Diameter-3 graph with a dominant-vertex partition: vertices 0..n1 form
/// rho1, vertex n1 is the rho2 vertex v, then n3 rho3 vertices, then n4
/// rho4 vertices. rho1 + v is a clique, rho3 + rho4 is a clique, and v is
/// adjacent to exactly the rho3 vertices.
pub fn diam3_cut(n1: usize, n3: usize, n4: usize) -> Result<Graph> {
    if n1 < 1 || n3 < 3 || n4 < 1 {
        return Err(Error::BadParameter(format!(
            "diameter-3 cut graph needs n1 >= 1, n3 >= 3, n4 >= 1, got ({n1}, {n3}, {n4})"
        )));
    }
    let n = n1 + 1 + n3 + n4;
    let v = n1;
    let mut edges = Vec::new();
    for a in 0..=v {
        for b in a + 1..=v {
            edges.push((a, b));
        }
    }
    for a in v + 1..=v + n3 {
        edges.push((v, a));
    }
    for a in v + 1..n {
        for b in a + 1..n {
            edges.push((a, b));
        }
    }
    Graph::from_edges(n, edges)
}

/// Graph whose complement is n1 isolated vertices followed by a star
/// forest; each leaf_counts entry contributes one star, center first.
pub fn lewis_graph(n1: usize, leaf_counts: &[usize]) -> Result<Graph> {
    if leaf_counts.is_empty() {
        return Err(Error::BadParameter("lewis graph needs at least one star".into()));
    }
    if leaf_counts.contains(&0) {
        return Err(Error::BadParameter("lewis graph star needs at least one leaf".into()));
    }
    let n = n1 + leaf_counts.iter().map(|c| c + 1).sum::<usize>();
    let mut edges = Vec::new();
    let mut next = n1;
    for &c in leaf_counts {
        let center = next;
        for leaf in center + 1..=center + c {
            edges.push((center, leaf));
        }
        next = center + c + 1;
    }
    Ok(Graph::from_edges(n, edges)?.complement())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FixtureId {
    Regular,
    TwoBlock,
    Diam3,
    Fitting,
}

impl FixtureId {
    pub const ALL: [FixtureId; 4] =
        [FixtureId::Regular, FixtureId::TwoBlock, FixtureId::Diam3, FixtureId::Fitting];

    pub fn name(self) -> &'static str {
        match self {
            FixtureId::Regular => "FIG_REGULAR",
            FixtureId::TwoBlock => "FIG_TWOBLOCK",
            FixtureId::Diam3 => "FIG_DIAM3",
            FixtureId::Fitting => "FIG_FITTING",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            FixtureId::Regular => "4-regular graph on 6 vertices (cocktail party form)",
            FixtureId::TwoBlock => "two complete blocks sharing one cut vertex",
            FixtureId::Diam3 => "diameter-3 graph with a cut vertex",
            FixtureId::Fitting => "complement of one isolated vertex plus a two-star forest",
        }
    }
}

impl FromStr for FixtureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<FixtureId> {
        FixtureId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownId(s.to_string()))
    }
}

/// Exact edge lists transcribed from the reference drawings; vertex i is
/// the figure's v(i+1).
pub fn fixture(id: FixtureId) -> Graph {
    let edges: &[(usize, usize)] = match id {
        FixtureId::Regular => &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 0),
            (0, 2),
            (2, 4),
            (4, 0),
            (1, 3),
            (3, 5),
            (5, 1),
        ],
        FixtureId::TwoBlock => {
            &[(0, 2), (2, 3), (3, 5), (0, 3), (3, 4), (4, 5), (0, 1), (1, 3), (1, 2)]
        }
        FixtureId::Diam3 => {
            &[(0, 1), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (2, 5), (3, 5), (4, 5)]
        }
        FixtureId::Fitting => &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 0),
            (0, 4),
            (1, 3),
            (2, 4),
            (3, 5),
            (2, 5),
            (1, 5),
        ],
    };
    Graph::from_edges(6, edges.iter().copied()).expect("fixture edge lists are valid")
}

/// Parametrized family instance with a canonical text form:
/// `cocktail:6`, `twoclique:6,2`, `diam3:1,3,1`, `lewis:1:2,1`,
/// `fixture:FIG_DIAM3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Cocktail { n: usize },
    TwoClique { n: usize, m: usize },
    Diam3 { n1: usize, n3: usize, n4: usize },
    Lewis { n1: usize, leaf_counts: Vec<usize> },
    Fixture(FixtureId),
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            FamilySpec::Cocktail { n } => cocktail_party(*n),
            FamilySpec::TwoClique { n, m } => two_clique_cut(*n, *m),
            FamilySpec::Diam3 { n1, n3, n4 } => diam3_cut(*n1, *n3, *n4),
            FamilySpec::Lewis { n1, leaf_counts } => lewis_graph(*n1, leaf_counts),
            FamilySpec::Fixture(id) => Ok(fixture(*id)),
        }
    }

    /// Text forms all start with a family prefix and a colon; no graph6
    /// string contains a colon, so the two input syntaxes never collide.
    pub fn is_family_text(s: &str) -> bool {
        s.contains(':')
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cocktail { n } => write!(f, "cocktail:{n}"),
            FamilySpec::TwoClique { n, m } => write!(f, "twoclique:{n},{m}"),
            FamilySpec::Diam3 { n1, n3, n4 } => write!(f, "diam3:{n1},{n3},{n4}"),
            FamilySpec::Lewis { n1, leaf_counts } => {
                let counts: Vec<String> = leaf_counts.iter().map(|c| c.to_string()).collect();
                write!(f, "lewis:{n1}:{}", counts.join(","))
            }
            FamilySpec::Fixture(id) => write!(f, "fixture:{}", id.name()),
        }
    }
}

fn parse_usize_list(s: &str, what: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|part| {
            part.parse::<usize>()
                .map_err(|_| Error::BadParameter(format!("{what}: bad integer {part:?}")))
        })
        .collect()
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilySpec> {
        let (head, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::BadParameter(format!("family spec {s:?} has no ':'")))?;
        match head {
            "cocktail" => {
                let ps = parse_usize_list(rest, "cocktail")?;
                match ps.as_slice() {
                    [n] => Ok(FamilySpec::Cocktail { n: *n }),
                    _ => Err(Error::BadParameter("cocktail takes one parameter".into())),
                }
            }
            "twoclique" => {
                let ps = parse_usize_list(rest, "twoclique")?;
                match ps.as_slice() {
                    [n, m] => Ok(FamilySpec::TwoClique { n: *n, m: *m }),
                    _ => Err(Error::BadParameter("twoclique takes two parameters".into())),
                }
            }
            "diam3" => {
                let ps = parse_usize_list(rest, "diam3")?;
                match ps.as_slice() {
                    [n1, n3, n4] => Ok(FamilySpec::Diam3 { n1: *n1, n3: *n3, n4: *n4 }),
                    _ => Err(Error::BadParameter("diam3 takes three parameters".into())),
                }
            }
            "lewis" => {
                let (n1, counts) = rest.split_once(':').ok_or_else(|| {
                    Error::BadParameter("lewis form is lewis:<n1>:<c1>,<c2>,...".into())
                })?;
                let n1 = n1
                    .parse::<usize>()
                    .map_err(|_| Error::BadParameter(format!("lewis: bad integer {n1:?}")))?;
                Ok(FamilySpec::Lewis { n1, leaf_counts: parse_usize_list(counts, "lewis")? })
            }
            "fixture" => Ok(FamilySpec::Fixture(rest.parse()?)),
            other => Err(Error::BadParameter(format!("unknown family {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::diameter;

    #[test]
    fn cocktail_small_cases() {
        // n = 4 is a 4-cycle in the order 0-2-1-3.
        let c4 = cocktail_party(4).unwrap();
        assert_eq!(c4.edges(), vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
        assert!(cocktail_party(5).is_err());
        assert!(cocktail_party(2).is_err());
        let g = cocktail_party(8).unwrap();
        assert!(g.is_regular());
        assert_eq!(g.degree(0), 6);
        assert_eq!(g.complement().edges(), vec![(0, 1), (2, 3), (4, 5), (6, 7)]);
    }

    #[test]
    fn two_clique_small_cases() {
        // Paw: triangle with a pendant.
        let g = two_clique_cut(4, 1).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (1, 3), (2, 3)]);
        // Bowtie.
        let g = two_clique_cut(5, 2).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]);
        assert_eq!(diameter(&g), Some(2));
        assert!(two_clique_cut(6, 3).is_err());
        assert!(two_clique_cut(4, 0).is_err());
    }

    #[test]
    fn diam3_matches_its_fixture() {
        assert_eq!(diam3_cut(1, 3, 1).unwrap(), fixture(FixtureId::Diam3));
        let g = diam3_cut(2, 3, 1).unwrap();
        assert_eq!(g.vertex_count(), 7);
        assert_eq!(diameter(&g), Some(3));
        assert!(diam3_cut(0, 3, 1).is_err());
        assert!(diam3_cut(1, 2, 1).is_err());
        assert!(diam3_cut(1, 3, 0).is_err());
    }

    #[test]
    fn lewis_complement_structure() {
        let g = lewis_graph(2, &[3]).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.complement().edges(), vec![(2, 3), (2, 4), (2, 5)]);
        // Universal vertices stay universal in the graph itself.
        assert_eq!(g.degree(0), 5);
        assert_eq!(g.degree(1), 5);
        // Single star without isolated part is disconnected.
        let g = lewis_graph(0, &[1]).unwrap();
        assert!(!g.is_connected());
        assert!(lewis_graph(1, &[]).is_err());
        assert!(lewis_graph(1, &[0]).is_err());
    }

    #[test]
    fn fixture_degree_sequences() {
        let degs = |g: &Graph| {
            let mut d: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
            d.sort_unstable();
            d
        };
        assert_eq!(degs(&fixture(FixtureId::Regular)), vec![4, 4, 4, 4, 4, 4]);
        assert_eq!(degs(&fixture(FixtureId::TwoBlock)), vec![2, 2, 3, 3, 3, 5]);
        assert_eq!(degs(&fixture(FixtureId::Diam3)), vec![1, 3, 4, 4, 4, 4]);
        assert_eq!(degs(&fixture(FixtureId::Fitting)), vec![3, 4, 4, 4, 4, 5]);
    }

    #[test]
    fn regular_fixture_complement_is_a_perfect_matching() {
        let g = fixture(FixtureId::Regular);
        assert_eq!(g.complement().edges(), vec![(0, 3), (1, 4), (2, 5)]);
    }

    #[test]
    fn diam3_fixture_has_the_long_pair() {
        let g = fixture(FixtureId::Diam3);
        assert_eq!(diameter(&g), Some(3));
        assert_eq!(crate::graph::DistanceMatrix::new(&g).get(0, 5), Some(3));
    }

    #[test]
    fn spec_text_round_trips() {
        for text in
            ["cocktail:6", "twoclique:6,2", "diam3:1,3,1", "lewis:1:2,1", "fixture:FIG_DIAM3"]
        {
            let spec: FamilySpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
            spec.build().unwrap();
        }
        assert!("cocktail:6,2".parse::<FamilySpec>().is_err());
        assert!("lewis:1".parse::<FamilySpec>().is_err());
        assert!("mystery:3".parse::<FamilySpec>().is_err());
        assert_eq!(
            "fixture:FIG_NOPE".parse::<FamilySpec>(),
            Err(Error::UnknownId("FIG_NOPE".into()))
        );
    }
}
