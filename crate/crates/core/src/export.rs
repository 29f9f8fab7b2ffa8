//! Deterministic text renderings of a graph.
//!
//! Vertices are always ascending and edges lexicographic, so identical
//! inputs give byte-identical output. The JSON layout is described in
//! `docs/graph-json.md`.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError, IdealGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExportFormat {
    Dot,
    Json,
    Edgelist,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExportError {
    #[error("unknown format `{0}`, expected dot, json or edgelist")]
    UnknownFormat(String),
    #[error("malformed graph JSON: {0}")]
    Json(String),
    #[error("inconsistent graph JSON: {0}")]
    Inconsistent(String),
}

impl FromStr for ExportFormat {
    type Err = ExportError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dot" => Ok(Self::Dot),
            "json" => Ok(Self::Json),
            "edgelist" => Ok(Self::Edgelist),
            other => Err(ExportError::UnknownFormat(other.to_owned())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportedVertex {
    pub label: u64,
    /// Display form `dZ_m`.
    pub ideal: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportedGraph {
    pub m: u64,
    pub n: u64,
    pub vertices: Vec<ExportedVertex>,
    pub edges: Vec<(u64, u64)>,
    pub isolated: Vec<u64>,
}

impl ExportedGraph {
    pub fn from_ideal_graph(g: &IdealGraph) -> Self {
        Self {
            m: g.pair().m().value(),
            n: g.pair().n().value(),
            vertices: g
                .vertices()
                .iter()
                .map(|&d| ExportedVertex {
                    label: d,
                    ideal: g.ideal_name(d),
                })
                .collect(),
            edges: g.labeled_edges(),
            isolated: g.isolated_vertices().into_iter().collect(),
        }
    }

    pub fn render(&self, format: ExportFormat) -> String {
        match format {
            ExportFormat::Dot => self.to_dot(),
            ExportFormat::Json => self.to_json(),
            ExportFormat::Edgelist => self.to_edgelist(),
        }
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    /// Parses JSON and checks that it is in the canonical form `to_json`
    /// emits: known endpoints, sorted edges and a matching isolated list.
    pub fn from_json(text: &str) -> Result<Self, ExportError> {
        let g: Self = serde_json::from_str(text).map_err(|e| ExportError::Json(e.to_string()))?;
        let graph = g.to_graph().map_err(|e| ExportError::Inconsistent(e.to_string()))?;
        if graph.labeled_edges() != g.edges {
            return Err(ExportError::Inconsistent(
                "edges must be distinct, ordered pairs a < b in ascending order".into(),
            ));
        }
        let isolated: Vec<u64> = graph.isolated_vertices().into_iter().map(|v| graph.label(v)).collect();
        if isolated != g.isolated {
            return Err(ExportError::Inconsistent(format!(
                "isolated list {:?} does not match edges (expected {isolated:?})",
                g.isolated
            )));
        }
        Ok(g)
    }

    pub fn to_graph(&self) -> Result<Graph, GraphError> {
        Graph::from_labeled_edges(
            self.vertices.iter().map(|v| v.label).collect(),
            self.edges.iter().copied(),
        )
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        writeln!(s, "graph \"G_{}(Z_{})\" {{", self.n, self.m).unwrap();
        for v in &self.vertices {
            writeln!(s, "  {} [label=\"{}\"];", v.label, v.ideal).unwrap();
        }
        for (a, b) in &self.edges {
            writeln!(s, "  {a} -- {b};").unwrap();
        }
        s.push_str("}\n");
        s
    }

    /// One `a b` line per edge.
    pub fn to_edgelist(&self) -> String {
        self.edges.iter().map(|(a, b)| format!("{a} {b}\n")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ModulePair;

    fn export(m: u64, n: u64) -> ExportedGraph {
        ExportedGraph::from_ideal_graph(&IdealGraph::build(&ModulePair::new(m, n).unwrap()))
    }

    #[test]
    fn edgelist_example() {
        assert_eq!(export(18, 18).to_edgelist(), "2 3\n2 6\n3 6\n3 9\n");
    }

    #[test]
    fn empty_graph_json() {
        let g = export(7, 7);
        assert!(g.vertices.is_empty());
        assert_eq!(ExportedGraph::from_json(&g.to_json()).unwrap(), g);
    }

    #[test]
    fn dot_lists_every_vertex_and_edge_once() {
        let dot = export(30, 30).to_dot();
        assert_eq!(dot.lines().filter(|l| l.contains("[label=")).count(), 6);
        assert_eq!(dot.lines().filter(|l| l.contains(" -- ")).count(), 9);
        assert!(dot.starts_with("graph \"G_30(Z_30)\" {\n"));
        assert!(dot.contains("  5 [label=\"5Z_30\"];\n"));
    }

    #[test]
    fn json_round_trip_up_to_200() {
        for m in 2..=200u64 {
            for n in (2..=m).filter(|n| m % n == 0) {
                let g = export(m, n);
                let back = ExportedGraph::from_json(&g.to_json()).unwrap();
                assert_eq!(back, g);
                let original = IdealGraph::build(&ModulePair::new(m, n).unwrap());
                assert_eq!(back.to_graph().unwrap().labeled_edges(), original.labeled_edges());
            }
        }
    }

    #[test]
    fn inconsistent_json_is_rejected() {
        let mut g = export(36, 6);
        g.isolated.pop();
        assert!(matches!(
            ExportedGraph::from_json(&g.to_json()),
            Err(ExportError::Inconsistent(_))
        ));
        let mut g = export(36, 6);
        g.edges.reverse();
        assert!(matches!(
            ExportedGraph::from_json(&g.to_json()),
            Err(ExportError::Inconsistent(_))
        ));
        assert!(matches!(ExportedGraph::from_json("{"), Err(ExportError::Json(_))));
        assert_eq!(
            "svg".parse::<ExportFormat>(),
            Err(ExportError::UnknownFormat("svg".into()))
        );
    }

    #[test]
    fn output_is_deterministic() {
        for f in [ExportFormat::Dot, ExportFormat::Json, ExportFormat::Edgelist] {
            assert_eq!(export(360, 60).render(f), export(360, 60).render(f));
        }
    }
}
