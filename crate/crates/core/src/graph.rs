//! Simple undirected graphs with integer vertex labels, and the intersection
//! graph `G_n(Z_m)` built on top of them.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;
use thiserror::Error;

use crate::arith::{lcm, ModulePair};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown vertex label {0}")]
    UnknownLabel(u64),
    #[error("duplicate vertex label {0}")]
    DuplicateLabel(u64),
}

/// Simple undirected graph. Vertices are indices `0..len`, each carrying a
/// distinct `u64` label. Adjacency is kept both as sorted lists and as a
/// dense matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<u64>,
    index: BTreeMap<u64, usize>,
    adj: Vec<Vec<usize>>,
    matrix: Vec<bool>,
    edge_count: usize,
}

impl Graph {
    /// Graph on `labels` with edges given as index pairs. Self-loops and
    /// repeated edges are dropped.
    pub fn new(labels: Vec<u64>, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let n = labels.len();
        let mut index = BTreeMap::new();
        for (i, &l) in labels.iter().enumerate() {
            if index.insert(l, i).is_some() {
                return Err(GraphError::DuplicateLabel(l));
            }
        }
        let mut g = Self {
            labels,
            index,
            adj: vec![Vec::new(); n],
            matrix: vec![false; n * n],
            edge_count: 0,
        };
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        Ok(g)
    }

    /// Graph on vertices labeled `0..n`.
    pub fn unlabeled(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        Self::new((0..n as u64).collect(), edges).expect("labels are distinct")
    }

    /// Graph from label pairs; the vertex set is `labels`.
    pub fn from_labeled_edges(
        labels: Vec<u64>,
        edges: impl IntoIterator<Item = (u64, u64)>,
    ) -> Result<Self, GraphError> {
        let mut g = Self::new(labels, std::iter::empty())?;
        for (a, b) in edges {
            let u = g.index_of(a)?;
            let v = g.index_of(b)?;
            g.add_edge(u, v);
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        Self::unlabeled(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Self::unlabeled(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
    }

    pub fn cycle(n: usize) -> Self {
        Self::unlabeled(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        let n = self.labels.len();
        if u == v || self.matrix[u * n + v] {
            return;
        }
        self.matrix[u * n + v] = true;
        self.matrix[v * n + u] = true;
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.edge_count += 1;
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> u64 {
        self.labels[v]
    }

    pub fn index_of(&self, label: u64) -> Result<usize, GraphError> {
        self.index.get(&label).copied().ok_or(GraphError::UnknownLabel(label))
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.matrix[u * self.labels.len() + v]
    }

    pub fn has_labeled_edge(&self, a: u64, b: u64) -> bool {
        match (self.index.get(&a), self.index.get(&b)) {
            (Some(&u), Some(&v)) => self.has_edge(u, v),
            _ => false,
        }
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic index order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn labeled_edges(&self) -> Vec<(u64, u64)> {
        let mut edges: Vec<_> = self
            .edges()
            .map(|(u, v)| {
                let (a, b) = (self.labels[u], self.labels[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        edges
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&v| self.adj[v].is_empty()).collect()
    }

    /// Connected components as ascending index lists, ordered by least member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    pub fn component_count(&self) -> usize {
        self.connected_components().len()
    }

    /// Subgraph induced on the given vertex indices, keeping their labels.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Graph {
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let pos: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let labels = keep.iter().map(|&v| self.labels[v]).collect();
        let edges = self
            .edges()
            .filter_map(|(u, v)| Some((*pos.get(&u)?, *pos.get(&v)?)))
            .collect::<Vec<_>>();
        Graph::new(labels, edges).expect("labels of a graph are distinct")
    }

    pub fn induced_by_labels(&self, keep: &BTreeSet<u64>) -> Result<Graph, GraphError> {
        let idx = keep.iter().map(|&l| self.index_of(l)).collect::<Result<Vec<_>, _>>()?;
        Ok(self.induced_subgraph(&idx))
    }

    /// Subgraph on the same vertex set with only the given edges.
    pub fn spanning_subgraph(&self, edges: &[(usize, usize)]) -> Graph {
        Graph::new(self.labels.clone(), edges.iter().copied()).expect("labels are distinct")
    }

    pub fn without_isolated(&self) -> Graph {
        let keep: Vec<usize> = (0..self.vertex_count()).filter(|&v| !self.adj[v].is_empty()).collect();
        self.induced_subgraph(&keep)
    }

    /// Label not used by any vertex, for auxiliary vertices.
    pub fn fresh_label(&self) -> u64 {
        self.labels.iter().max().map_or(0, |&l| l + 1)
    }

    /// This graph plus one new vertex adjacent to every existing vertex.
    pub fn with_apex(&self) -> Graph {
        let n = self.vertex_count();
        let mut labels = self.labels.clone();
        labels.push(self.fresh_label());
        let edges = self.edges().chain((0..n).map(|v| (v, n))).collect::<Vec<_>>();
        Graph::new(labels, edges).expect("fresh label is distinct")
    }

    /// Biconnected components as edge lists. Bridges form single-edge blocks;
    /// isolated vertices belong to no block.
    pub fn blocks(&self) -> Vec<Vec<(usize, usize)>> {
        let n = self.vertex_count();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut timer = 0;
        let mut edge_stack: Vec<(usize, usize)> = Vec::new();
        let mut blocks = Vec::new();

        for root in 0..n {
            if disc[root] != usize::MAX || self.adj[root].is_empty() {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            // (vertex, parent, next neighbor position)
            let mut stack = vec![(root, usize::MAX, 0usize)];
            while let Some(&mut (u, parent, ref mut pos)) = stack.last_mut() {
                if *pos < self.adj[u].len() {
                    let w = self.adj[u][*pos];
                    *pos += 1;
                    if w == parent {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        edge_stack.push((u, w));
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, u, 0));
                    } else if disc[w] < disc[u] {
                        edge_stack.push((u, w));
                        low[u] = low[u].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[u]);
                        if low[u] >= disc[parent] {
                            let mut block = Vec::new();
                            while let Some(e) = edge_stack.pop() {
                                block.push((e.0.min(e.1), e.0.max(e.1)));
                                if e == (parent, u) {
                                    break;
                                }
                            }
                            block.sort_unstable();
                            blocks.push(block);
                        }
                    }
                }
            }
        }
        blocks
    }
}

/// `G_n(Z_m)`: vertices are the divisors `d` with `1 < d < m` (standing for
/// the ideals `dZ_m`), and `d1 ~ d2` iff `n` does not divide `lcm(d1, d2)`.
#[derive(Debug, Clone)]
pub struct IdealGraph {
    pair: ModulePair,
    exponents: Vec<Vec<u32>>,
    graph: Graph,
}

impl IdealGraph {
    pub fn build(pair: &ModulePair) -> Self {
        let n = pair.n().value();
        let vertices = pair.m().proper_nontrivial_divisors();
        let exponents = vertices.iter().map(|&d| pair.m().exponent_vector(d)).collect();
        let k = vertices.len();
        let mut edges = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                if !lcm(vertices[i], vertices[j]).is_multiple_of(n) {
                    edges.push((i, j));
                }
            }
        }
        let graph = Graph::new(vertices, edges).expect("divisors are distinct");
        Self {
            pair: pair.clone(),
            exponents,
            graph,
        }
    }

    pub fn pair(&self) -> &ModulePair {
        &self.pair
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertices(&self) -> &[u64] {
        self.graph.labels()
    }

    /// Exponent vector of vertex `v` over the primes of `m`.
    pub fn exponents(&self, v: usize) -> &[u32] {
        &self.exponents[v]
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn isolated_vertices(&self) -> BTreeSet<u64> {
        self.graph
            .isolated_vertices()
            .into_iter()
            .map(|v| self.graph.label(v))
            .collect()
    }

    /// Vertices `d` with `n | d`; these are isolated, though not every
    /// isolated vertex has this form.
    pub fn annihilated_vertices(&self) -> BTreeSet<u64> {
        let n = self.pair.n().value();
        self.vertices().iter().copied().filter(|d| d % n == 0).collect()
    }

    pub fn components(&self) -> Vec<BTreeSet<u64>> {
        self.graph
            .connected_components()
            .into_iter()
            .map(|c| c.into_iter().map(|v| self.graph.label(v)).collect())
            .collect()
    }

    pub fn induced_subgraph(&self, keep: &BTreeSet<u64>) -> Result<Graph, GraphError> {
        self.graph.induced_by_labels(keep)
    }

    /// Display form of the ideal for vertex label `d`.
    pub fn ideal_name(&self, d: u64) -> String {
        format!("{d}Z_{}", self.pair.m().value())
    }

    pub fn summary(&self) -> GraphSummary {
        GraphSummary {
            m: self.pair.m().value(),
            n: self.pair.n().value(),
            vertices: self.graph.vertex_count(),
            edges: self.graph.edge_count(),
            isolated: self.isolated_vertices().len(),
            components: self.graph.component_count(),
        }
    }
}

impl std::ops::Deref for IdealGraph {
    type Target = Graph;

    fn deref(&self) -> &Graph {
        &self.graph
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub m: u64,
    pub n: u64,
    pub vertices: usize,
    pub edges: usize,
    pub isolated: usize,
    pub components: usize,
}
