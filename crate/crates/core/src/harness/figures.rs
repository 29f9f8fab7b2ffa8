//! The five drawn examples, transcribed vertex by vertex and edge by edge
//! for arbitrary distinct primes.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{Decisions, HarnessError};
use crate::arith::{is_prime, ModulePair};
use crate::closed_form::{predict, Prediction};
use crate::export::ExportedGraph;
use crate::graph::IdealGraph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FigureFixture {
    pub figure: u8,
    pub caption: String,
    pub m: u64,
    pub n: u64,
    /// Drawing names `v1, v2, ...` and the divisor each stands for.
    pub vertex_names: Vec<(String, u64)>,
    pub expected_edges: BTreeSet<(u64, u64)>,
    pub expected_isolated: BTreeSet<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixtureDiff {
    pub missing_edges: Vec<(u64, u64)>,
    pub extra_edges: Vec<(u64, u64)>,
    pub isolated_expected: Vec<u64>,
    pub isolated_actual: Vec<u64>,
}

impl FigureFixture {
    pub fn pair(&self) -> ModulePair {
        ModulePair::new(self.m, self.n).expect("fixture pairs are valid")
    }

    /// Differences between the fixture and the built graph, `None` if exact.
    pub fn diff(&self, g: &IdealGraph) -> Option<FixtureDiff> {
        let actual: BTreeSet<(u64, u64)> = g.labeled_edges().into_iter().collect();
        let isolated = g.isolated_vertices();
        if actual == self.expected_edges && isolated == self.expected_isolated {
            return None;
        }
        Some(FixtureDiff {
            missing_edges: self.expected_edges.difference(&actual).copied().collect(),
            extra_edges: actual.difference(&self.expected_edges).copied().collect(),
            isolated_expected: self.expected_isolated.iter().copied().collect(),
            isolated_actual: isolated.into_iter().collect(),
        })
    }

    pub fn check(&self) -> Result<IdealGraph, FixtureDiff> {
        let g = IdealGraph::build(&self.pair());
        match self.diff(&g) {
            None => Ok(g),
            Some(d) => Err(d),
        }
    }
}

/// What the figures command writes per figure: the exported graph with its
/// structural and closed-form classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FigureDocument {
    pub figure: u8,
    pub caption: String,
    pub vertex_names: Vec<(String, u64)>,
    pub structural: Decisions,
    pub closed_form: Prediction,
    pub graph: ExportedGraph,
}

impl FigureDocument {
    /// Builds the document after checking the graph against the fixture.
    pub fn build(fixture: &FigureFixture) -> Result<Self, FixtureDiff> {
        let g = fixture.check()?;
        Ok(Self {
            figure: fixture.figure,
            caption: fixture.caption.clone(),
            vertex_names: fixture.vertex_names.clone(),
            structural: Decisions::structural(&g),
            closed_form: predict(g.pair()),
            graph: ExportedGraph::from_ideal_graph(&g),
        })
    }

    pub fn file_name(&self) -> String {
        format!("figure{}.json", self.figure)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}

fn fixture(
    figure: u8,
    caption: &str,
    m: u64,
    n: u64,
    names: &[u64],
    edges: &[(usize, usize)],
    isolated: &[usize],
) -> FigureFixture {
    let name = |i: usize| names[i - 1];
    FigureFixture {
        figure,
        caption: caption.to_string(),
        m,
        n,
        vertex_names: names
            .iter()
            .enumerate()
            .map(|(i, &d)| (format!("v{}", i + 1), d))
            .collect(),
        expected_edges: edges
            .iter()
            .map(|&(a, b)| (name(a).min(name(b)), name(a).max(name(b))))
            .collect(),
        expected_isolated: isolated.iter().map(|&i| name(i)).collect(),
    }
}

/// The five figure fixtures under `p1, p2, p3`. Edges are listed by the
/// `v`-numbers of the drawings.
pub fn figure_fixtures(p1: u64, p2: u64, p3: u64) -> Result<Vec<FigureFixture>, HarnessError> {
    for p in [p1, p2, p3] {
        if !is_prime(p) {
            return Err(HarnessError::NotPrime(p));
        }
    }
    if p1 == p2 || p1 == p3 || p2 == p3 {
        return Err(HarnessError::PrimesNotDistinct(p1, p2, p3));
    }
    Ok(vec![
        fixture(
            1,
            "G(Z_{p1 p2^2})",
            p1 * p2 * p2,
            p1 * p2 * p2,
            &[p2, p1 * p2, p2 * p2, p1],
            &[(1, 2), (4, 2), (1, 4), (1, 3)],
            &[],
        ),
        fixture(
            2,
            "G_{p1 p2^2}(Z_{p1 p2^3})",
            p1 * p2.pow(3),
            p1 * p2 * p2,
            &[p1 * p2, p1 * p2 * p2, p2 * p2, p1, p2, p2.pow(3)],
            &[(3, 6), (6, 5), (3, 5), (5, 4), (1, 4), (1, 5)],
            &[2],
        ),
        fixture(
            3,
            "G_{p1 p2}(Z_{p1 p2 p3})",
            p1 * p2 * p3,
            p1 * p2,
            &[p1, p1 * p2, p2, p1 * p3, p3, p2 * p3],
            &[(3, 6), (6, 5), (3, 5), (5, 4), (1, 4), (1, 5)],
            &[2],
        ),
        fixture(
            4,
            "G(Z_{p1 p2 p3})",
            p1 * p2 * p3,
            p1 * p2 * p3,
            &[p1 * p2, p1, p1 * p3, p2, p3, p2 * p3],
            &[(6, 5), (5, 3), (4, 2), (5, 2), (6, 4), (4, 1), (3, 2), (2, 1), (4, 5)],
            &[],
        ),
        fixture(
            5,
            "G_{p1 p2}(Z_{p1 p2^3})",
            p1 * p2.pow(3),
            p1 * p2,
            &[p2, p2 * p2, p2.pow(3), p1 * p2, p1, p1 * p2 * p2],
            &[(1, 2), (2, 3), (3, 1)],
            &[4, 5, 6],
        ),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edges(xs: &[(u64, u64)]) -> BTreeSet<(u64, u64)> {
        xs.iter().copied().collect()
    }

    #[test]
    fn instantiated_with_2_3_5() {
        let figs = figure_fixtures(2, 3, 5).unwrap();
        assert_eq!(figs[0].expected_edges, edges(&[(3, 6), (2, 6), (2, 3), (3, 9)]));
        assert_eq!(figs[4].expected_edges, edges(&[(3, 9), (9, 27), (3, 27)]));
        assert_eq!(figs[1].expected_isolated, [18].into());
        let sizes: Vec<(usize, usize)> = figs
            .iter()
            .map(|f| (f.expected_edges.len(), f.expected_isolated.len()))
            .collect();
        assert_eq!(sizes, vec![(4, 0), (6, 1), (6, 1), (9, 0), (3, 3)]);
        for f in &figs {
            assert_eq!(f.check().err(), None, "figure {}", f.figure);
        }
    }

    #[test]
    fn other_primes() {
        for (a, b, c) in [(3, 2, 5), (5, 7, 11), (13, 3, 2)] {
            for f in figure_fixtures(a, b, c).unwrap() {
                assert_eq!(f.check().err(), None, "figure {} with {a},{b},{c}", f.figure);
            }
        }
    }

    #[test]
    fn rejects_bad_primes() {
        assert_eq!(figure_fixtures(2, 2, 5), Err(HarnessError::PrimesNotDistinct(2, 2, 5)));
        assert_eq!(figure_fixtures(2, 4, 5), Err(HarnessError::NotPrime(4)));
    }

    #[test]
    fn documents_round_trip() {
        for f in figure_fixtures(2, 3, 5).unwrap() {
            let doc = FigureDocument::build(&f).unwrap();
            let back: FigureDocument = serde_json::from_str(&doc.to_json()).unwrap();
            assert_eq!(back, doc);
            assert_eq!(doc.graph.edges.len(), f.expected_edges.len());
        }
    }

    #[test]
    fn diff_reports_changes() {
        let mut f = figure_fixtures(2, 3, 5).unwrap().remove(0);
        f.expected_edges.remove(&(3, 9));
        let d = f.check().unwrap_err();
        assert_eq!(d.extra_edges, vec![(3, 9)]);
        assert!(d.missing_edges.is_empty());
    }
}
