//! Per-graph reports and family sweeps. A report carries the exact oracle
//! values next to every applicable closed-form prediction, plus an entry
//! for each disagreement; nothing is suppressed and nothing is assumed.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::Serialize;

use crate::automorphism::{automorphisms, base_size};
use crate::classify::{
    check_blocks_complete, diam3_partition, recognize_lewis, Diam3Outcome, Diam3Partition,
    LewisStructure,
};
use crate::error::{Error, Result};
use crate::exec::map_ordered;
use crate::families::FamilySpec;
use crate::formulas::{predict, structural_predictions, Prediction, TheoremTag};
use crate::graph::{cut_vertices, diameter, Graph};
use crate::graph6::{parse_graph6, write_graph6};
use crate::resolving::{adjacency_dimension, metric_dimension};
use crate::twins::{twin_partition, TwinClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Confirmed,
    Refuted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleValues {
    pub metric_dim: Option<usize>,
    pub adjacency_dim: Option<usize>,
    pub base_size: Option<usize>,
    pub aut_order: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    pub metric: Option<Vec<usize>>,
    pub adjacency: Option<Vec<usize>>,
    pub base: Option<Vec<usize>>,
}

/// Names an oracle field left empty and says why.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Skip {
    pub field: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwinSummary {
    pub classes: Vec<TwinClass>,
    pub lower_bound: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureSummary {
    pub diameter: Option<u32>,
    pub cut_vertices: Vec<usize>,
    pub blocks_complete: Option<bool>,
    pub lewis: Option<LewisStructure>,
    pub diam3_partition: Option<Diam3Partition>,
}

/// A prediction that the oracle contradicted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub claim_ref: String,
    pub expected: usize,
    pub observed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionReport {
    pub id: String,
    pub n: usize,
    pub oracle: OracleValues,
    pub witnesses: Witnesses,
    pub skipped: Vec<Skip>,
    pub twin: TwinSummary,
    pub structure: StructureSummary,
    pub predictions: Vec<Prediction>,
    pub discrepancies: Vec<Discrepancy>,
}

/// Full analysis of one graph. Oracle fields that would exceed a budget
/// (or need connectivity the graph lacks) are skipped, never guessed.
pub fn analyze_graph(id: impl Into<String>, g: &Graph) -> DimensionReport {
    let mut skipped = Vec::new();
    let mut skip = |field: &str, err: Error| {
        skipped.push(Skip { field: field.into(), reason: err.to_string() });
    };

    let (metric_dim, metric_witness) = match metric_dimension(g) {
        Ok(r) => (Some(r.value), Some(r.witness)),
        Err(e) => {
            skip("metric_dim", e);
            (None, None)
        }
    };
    let (adjacency_dim, adjacency_witness) = match adjacency_dimension(g) {
        Ok(r) => (Some(r.value), Some(r.witness)),
        Err(e) => {
            skip("adjacency_dim", e);
            (None, None)
        }
    };
    let (base, base_witness) = match base_size(g) {
        Ok(r) => (Some(r.size), Some(r.witness)),
        Err(e) => {
            skip("base_size", e);
            (None, None)
        }
    };
    let aut_order = match automorphisms(g) {
        Ok(group) => Some(group.order()),
        Err(e) => {
            skip("aut_order", e);
            None
        }
    };

    let tp = twin_partition(g);
    let twin = TwinSummary { lower_bound: tp.lower_bound(), classes: tp.classes };

    let structure = StructureSummary {
        diameter: diameter(g),
        cut_vertices: cut_vertices(g),
        blocks_complete: check_blocks_complete(g).unwrap_or(None),
        lewis: recognize_lewis(g),
        diam3_partition: match diam3_partition(g) {
            Ok(Diam3Outcome::Partition(p)) => Some(p),
            _ => None,
        },
    };

    let predictions = match structural_predictions(g) {
        Ok(ps) => ps,
        Err(e) => {
            skip("predictions", e);
            Vec::new()
        }
    };

    let mut discrepancies = Vec::new();
    for p in &predictions {
        let mut check = |suffix: &str, observed: Option<usize>| {
            if let Some(o) = observed {
                if o != p.value {
                    discrepancies.push(Discrepancy {
                        claim_ref: format!("{}.{}", p.source, suffix),
                        expected: p.value,
                        observed: o,
                    });
                }
            }
        };
        check("metric_dim", metric_dim);
        if p.source == TheoremTag::AllTwins {
            check("adjacency_dim", adjacency_dim);
            check("base_size", base);
        }
    }

    DimensionReport {
        id: id.into(),
        n: g.vertex_count(),
        oracle: OracleValues { metric_dim, adjacency_dim, base_size: base, aut_order },
        witnesses: Witnesses {
            metric: metric_witness,
            adjacency: adjacency_witness,
            base: base_witness,
        },
        skipped,
        twin,
        structure,
        predictions,
        discrepancies,
    }
}

/// Accepts either a family spec text (contains ':') or a graph6 line. The
/// report id is the canonical form: the spec's normalized text, or the
/// canonical graph6 bytes re-emitted.
pub fn analyze_input(input: &str) -> Result<DimensionReport> {
    let s = input.trim();
    if FamilySpec::is_family_text(s) {
        let spec = FamilySpec::from_str(s)?;
        let g = spec.build()?;
        Ok(analyze_graph(spec.to_string(), &g))
    } else {
        let g = parse_graph6(s)?;
        let id = write_graph6(&g)?;
        Ok(analyze_graph(id, &g))
    }
}

/// Default full-sweep cap on instance order.
pub const DEFAULT_SWEEP_BUDGET: usize = 11;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepFamily {
    Cocktail,
    TwoClique,
    Diam3,
    Lewis,
}

impl FromStr for SweepFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<SweepFamily> {
        match s {
            "cocktail" => Ok(SweepFamily::Cocktail),
            "twoclique" => Ok(SweepFamily::TwoClique),
            "diam3" => Ok(SweepFamily::Diam3),
            "lewis" => Ok(SweepFamily::Lewis),
            other => Err(Error::BadParameter(format!(
                "unknown family '{other}' (expected cocktail, twoclique, diam3, or lewis)"
            ))),
        }
    }
}

/// Parameter ranges for one family sweep. Ranges are inclusive; instances
/// are the in-range parameter tuples the generators accept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepPlan {
    pub family: SweepFamily,
    ranges: BTreeMap<String, (usize, usize)>,
}

impl SweepPlan {
    pub fn new(family: SweepFamily) -> SweepPlan {
        let mut ranges = BTreeMap::new();
        let mut put = |k: &str, lo: usize, hi: usize| {
            ranges.insert(k.to_string(), (lo, hi));
        };
        match family {
            SweepFamily::Cocktail => put("n", 4, 10),
            SweepFamily::TwoClique => {
                put("n", 5, 10);
                // m's upper end tracks each n; the stored bound only caps it.
                put("m", 1, usize::MAX);
            }
            SweepFamily::Diam3 => {
                put("n1", 1, 3);
                put("n3", 3, 4);
                put("n4", 1, 2);
            }
            SweepFamily::Lewis => put("n1", 0, 2),
        }
        SweepPlan { family, ranges }
    }

    /// Overrides one parameter range; the key must belong to the family.
    pub fn with_range(mut self, key: &str, lo: usize, hi: usize) -> Result<SweepPlan> {
        if !self.ranges.contains_key(key) {
            return Err(Error::BadRange(format!(
                "family has no parameter '{key}' (available: {})",
                self.ranges.keys().cloned().collect::<Vec<_>>().join(", ")
            )));
        }
        if lo > hi {
            return Err(Error::BadRange(format!("empty range {lo}..={hi} for '{key}'")));
        }
        self.ranges.insert(key.to_string(), (lo, hi));
        Ok(self)
    }

    fn range(&self, key: &str) -> (usize, usize) {
        self.ranges[key]
    }

    /// All in-range instances in parameter order. Tuples the generators
    /// reject (odd cocktail orders, oversized m) are not instances; any
    /// accepted instance larger than the budget is a range error.
    pub fn instances(&self, budget: usize) -> Result<Vec<FamilySpec>> {
        let mut out = Vec::new();
        match self.family {
            SweepFamily::Cocktail => {
                let (lo, hi) = self.range("n");
                for n in lo..=hi {
                    if n >= 4 && n % 2 == 0 {
                        out.push(FamilySpec::Cocktail { n });
                    }
                }
            }
            SweepFamily::TwoClique => {
                let (nlo, nhi) = self.range("n");
                let (mlo, mhi) = self.range("m");
                for n in nlo.max(4)..=nhi {
                    for m in mlo.max(1)..=mhi.min((n - 1) / 2) {
                        out.push(FamilySpec::TwoClique { n, m });
                    }
                }
            }
            SweepFamily::Diam3 => {
                let (alo, ahi) = self.range("n1");
                let (blo, bhi) = self.range("n3");
                let (clo, chi) = self.range("n4");
                for n1 in alo.max(1)..=ahi {
                    for n3 in blo.max(3)..=bhi {
                        for n4 in clo.max(1)..=chi {
                            out.push(FamilySpec::Diam3 { n1, n3, n4 });
                        }
                    }
                }
            }
            SweepFamily::Lewis => {
                let (lo, hi) = self.range("n1");
                for n1 in lo..=hi {
                    // Stars cost 1 + leaf_count vertices each; keep every
                    // connected shape fitting the budget.
                    if n1 + 2 > budget {
                        continue;
                    }
                    let mut specs = Vec::new();
                    let mut prefix = Vec::new();
                    collect_leaf_multisets(budget - n1, usize::MAX, &mut prefix, &mut specs);
                    specs.sort();
                    for leaf_counts in specs {
                        let spec = FamilySpec::Lewis { n1, leaf_counts };
                        let g = spec.build().expect("enumerated parameters are valid");
                        if g.is_connected() {
                            out.push(spec);
                        }
                    }
                }
            }
        }
        if out.is_empty() {
            return Err(Error::BadRange("ranges produce no instances".into()));
        }
        for spec in &out {
            let n = spec.build().expect("enumerated parameters are valid").vertex_count();
            if n > budget {
                return Err(Error::BadRange(format!(
                    "instance {spec} has {n} vertices, over the budget of {budget}"
                )));
            }
        }
        Ok(out)
    }
}

/// Non-increasing positive leaf-count sequences whose stars fit in
/// `room` vertices (each star occupies 1 + count).
fn collect_leaf_multisets(
    room: usize,
    max_next: usize,
    prefix: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if !prefix.is_empty() {
        out.push(prefix.clone());
    }
    let mut c = max_next.min(room.saturating_sub(1));
    while c >= 1 {
        prefix.push(c);
        collect_leaf_multisets(room - 1 - c, c, prefix, out);
        prefix.pop();
        c -= 1;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepEntry {
    pub spec: String,
    pub prediction: Prediction,
    /// None when the oracle was skipped, so nothing could be adjudicated.
    pub verdict: Option<Verdict>,
    pub report: DimensionReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TagSummary {
    pub source: TheoremTag,
    pub confirmed: usize,
    pub refuted: usize,
    pub undecided: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepResult {
    pub entries: Vec<SweepEntry>,
    pub summary: Vec<TagSummary>,
}

/// Runs every instance of the plan and judges the family prediction
/// against the exact dimension. Entry order is parameter order no matter
/// how many workers run.
pub fn run_sweep(plan: &SweepPlan, budget: usize, jobs: usize) -> Result<SweepResult> {
    let specs = plan.instances(budget)?;
    let entries = map_ordered(specs, jobs, |spec| {
        let g = spec.build().expect("enumerated parameters are valid");
        let report = analyze_graph(spec.to_string(), &g);
        let prediction = predict(&spec).expect("parametric families always predict");
        let verdict = report.oracle.metric_dim.map(|d| {
            if d == prediction.value {
                Verdict::Confirmed
            } else {
                Verdict::Refuted
            }
        });
        SweepEntry { spec: spec.to_string(), prediction, verdict, report }
    });

    let mut summary = Vec::new();
    for tag in [
        TheoremTag::Regular,
        TheoremTag::TwoBlocks,
        TheoremTag::Diam3Cut,
        TheoremTag::LewisStars,
        TheoremTag::AllTwins,
        TheoremTag::Chartrand,
    ] {
        let mine: Vec<&SweepEntry> =
            entries.iter().filter(|e| e.prediction.source == tag).collect();
        if mine.is_empty() {
            continue;
        }
        summary.push(TagSummary {
            source: tag,
            confirmed: mine.iter().filter(|e| e.verdict == Some(Verdict::Confirmed)).count(),
            refuted: mine.iter().filter(|e| e.verdict == Some(Verdict::Refuted)).count(),
            undecided: mine.iter().filter(|e| e.verdict.is_none()).count(),
        });
    }
    Ok(SweepResult { entries, summary })
}
