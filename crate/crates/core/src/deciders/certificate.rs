//! Planarity certificates and their independent audit.
//!
//! A positive answer carries a rotation system whose traced faces must satisfy
//! Euler's formula `V - E + F = 1 + C`. A negative answer carries a subdivision
//! of a forbidden graph, checked edge by edge.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// For each vertex (by label), the cyclic order of its neighbors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationSystem {
    pub rotations: Vec<(u64, Vec<u64>)>,
}

impl RotationSystem {
    /// Faces of the embedded plane graph: traced faces per component, with an
    /// isolated vertex counting as one face and the outer faces of all
    /// components merged into one. `None` if the rotations do not describe a
    /// rotation system of `g`.
    pub fn face_count(&self, g: &Graph) -> Option<usize> {
        let n = g.vertex_count();
        if self.rotations.len() != n {
            return None;
        }
        // rotation position of each neighbor, per vertex index
        let mut order: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut seen = vec![false; n];
        for (label, rot) in &self.rotations {
            let v = g.index_of(*label).ok()?;
            if std::mem::replace(&mut seen[v], true) {
                return None;
            }
            let idx = rot.iter().map(|&l| g.index_of(l).ok()).collect::<Option<Vec<_>>>()?;
            let as_set: BTreeSet<usize> = idx.iter().copied().collect();
            if as_set.len() != idx.len() || !as_set.iter().copied().eq(g.neighbors(v).iter().copied()) {
                return None;
            }
            order[v] = idx;
        }
        let successor = |v: usize, u: usize| -> usize {
            let rot = &order[v];
            let pos = rot.iter().position(|&x| x == u).expect("u is a neighbor of v");
            rot[(pos + 1) % rot.len()]
        };

        let mut visited: BTreeSet<(usize, usize)> = BTreeSet::new();
        let mut faces = 0usize;
        for (u, v) in g.edges() {
            for dart in [(u, v), (v, u)] {
                if visited.contains(&dart) {
                    continue;
                }
                faces += 1;
                let mut d = dart;
                while visited.insert(d) {
                    let (a, b) = d;
                    d = (b, successor(b, a));
                }
                if d != dart {
                    return None;
                }
            }
        }
        let components = g.component_count();
        let isolated = g.isolated_vertices().len();
        // merge the outer faces of all components into one
        Some(faces + isolated + 1 - components)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SubdivisionKind {
    K5,
    K33,
    K4,
    K23,
}

impl SubdivisionKind {
    pub fn branch_count(self) -> usize {
        match self {
            Self::K5 | Self::K23 => 5,
            Self::K33 => 6,
            Self::K4 => 4,
        }
    }

    /// Branch-vertex index pairs that must be joined by a path. Bipartite
    /// kinds list the smaller side first.
    pub fn required_pairs(self) -> Vec<(usize, usize)> {
        let complete = |k: usize| (0..k).flat_map(move |i| (i + 1..k).map(move |j| (i, j))).collect();
        let bipartite = |a: usize, b: usize| (0..a).flat_map(move |i| (a..a + b).map(move |j| (i, j))).collect();
        match self {
            Self::K5 => complete(5),
            Self::K4 => complete(4),
            Self::K33 => bipartite(3, 3),
            Self::K23 => bipartite(2, 3),
        }
    }
}

impl std::fmt::Display for SubdivisionKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::K5 => "K5",
            Self::K33 => "K3,3",
            Self::K4 => "K4",
            Self::K23 => "K2,3",
        })
    }
}

/// A subdivision of `kind` inside a graph: branch vertices plus one path per
/// required branch pair, all by label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subdivision {
    pub kind: SubdivisionKind,
    pub branch_vertices: Vec<u64>,
    pub paths: Vec<Vec<u64>>,
}

impl Subdivision {
    /// Subdivision whose paths are single edges, e.g. a clique.
    pub fn direct(kind: SubdivisionKind, branch_vertices: Vec<u64>) -> Self {
        let paths = kind
            .required_pairs()
            .into_iter()
            .map(|(i, j)| vec![branch_vertices[i], branch_vertices[j]])
            .collect();
        Self {
            kind,
            branch_vertices,
            paths,
        }
    }

    pub fn is_direct(&self) -> bool {
        self.paths.iter().all(|p| p.len() == 2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum PlanarityCertificate {
    Embedding(RotationSystem),
    ForbiddenSubdivision(Subdivision),
}

/// Checks a certificate against `g`. Embeddings must be rotation systems of
/// `g` satisfying Euler's formula; subdivisions must be genuine.
pub fn verify_certificate(g: &Graph, cert: &PlanarityCertificate) -> bool {
    match cert {
        PlanarityCertificate::Embedding(rot) => verify_embedding(g, rot),
        PlanarityCertificate::ForbiddenSubdivision(sub) => verify_subdivision(g, sub),
    }
}

pub fn verify_embedding(g: &Graph, rot: &RotationSystem) -> bool {
    let Some(faces) = rot.face_count(g) else {
        return false;
    };
    let v = g.vertex_count() as i64;
    let e = g.edge_count() as i64;
    let c = g.component_count() as i64;
    v - e + faces as i64 == 1 + c
}

pub fn verify_subdivision(g: &Graph, sub: &Subdivision) -> bool {
    let branch = &sub.branch_vertices;
    if branch.len() != sub.kind.branch_count() {
        return false;
    }
    let branch_pos: BTreeMap<u64, usize> = branch.iter().enumerate().map(|(i, &b)| (b, i)).collect();
    if branch_pos.len() != branch.len() || branch.iter().any(|&b| g.index_of(b).is_err()) {
        return false;
    }
    let mut needed: BTreeSet<(usize, usize)> = sub.kind.required_pairs().into_iter().collect();
    if sub.paths.len() != needed.len() {
        return false;
    }
    let mut interior_used: BTreeSet<u64> = BTreeSet::new();
    for path in &sub.paths {
        if path.len() < 2 {
            return false;
        }
        let (Some(&a), Some(&b)) = (branch_pos.get(&path[0]), branch_pos.get(&path[path.len() - 1])) else {
            return false;
        };
        if !needed.remove(&(a.min(b), a.max(b))) {
            return false;
        }
        if !path.windows(2).all(|w| g.has_labeled_edge(w[0], w[1])) {
            return false;
        }
        for &x in &path[1..path.len() - 1] {
            if branch_pos.contains_key(&x) || !interior_used.insert(x) {
                return false;
            }
        }
    }
    needed.is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k5_direct() -> (Graph, Subdivision) {
        let g = Graph::complete(5);
        let sub = Subdivision::direct(SubdivisionKind::K5, vec![0, 1, 2, 3, 4]);
        (g, sub)
    }

    #[test]
    fn tree_embedding_has_one_face() {
        let g = Graph::unlabeled(4, [(0, 1), (1, 2), (1, 3)]);
        let rot = RotationSystem {
            rotations: vec![(0, vec![1]), (1, vec![0, 2, 3]), (2, vec![1]), (3, vec![1])],
        };
        assert_eq!(rot.face_count(&g), Some(1));
        assert!(verify_embedding(&g, &rot));
    }

    #[test]
    fn forest_with_isolated_vertices() {
        let g = Graph::unlabeled(5, [(0, 1), (2, 3)]);
        let rot = RotationSystem {
            rotations: vec![(0, vec![1]), (1, vec![0]), (2, vec![3]), (3, vec![2]), (4, vec![])],
        };
        assert_eq!(rot.face_count(&g), Some(1));
        assert!(verify_embedding(&g, &rot));
    }

    #[test]
    fn k4_rotations_planar_and_not() {
        let g = Graph::complete(4);
        // planar: 3 drawn around 0 inside triangle 0-1-2
        let good = RotationSystem {
            rotations: vec![
                (0, vec![1, 3, 2]),
                (1, vec![2, 3, 0]),
                (2, vec![0, 3, 1]),
                (3, vec![0, 1, 2]),
            ],
        };
        assert_eq!(good.face_count(&g), Some(4));
        assert!(verify_embedding(&g, &good));
        let bad = RotationSystem {
            rotations: vec![
                (0, vec![1, 2, 3]),
                (1, vec![0, 2, 3]),
                (2, vec![0, 1, 3]),
                (3, vec![0, 1, 2]),
            ],
        };
        assert!(!verify_embedding(&g, &bad));
    }

    #[test]
    fn rotation_must_match_neighborhoods() {
        let g = Graph::cycle(3);
        let missing = RotationSystem {
            rotations: vec![(0, vec![1]), (1, vec![0, 2]), (2, vec![0, 1])],
        };
        assert!(!verify_embedding(&g, &missing));
        let dup = RotationSystem {
            rotations: vec![(0, vec![1, 2]), (0, vec![1, 2]), (2, vec![0, 1])],
        };
        assert!(!verify_embedding(&g, &dup));
    }

    #[test]
    fn direct_k5_witness() {
        let (g, sub) = k5_direct();
        assert!(verify_subdivision(&g, &sub));
        let mut wrong_kind = sub.clone();
        wrong_kind.kind = SubdivisionKind::K33;
        assert!(!verify_subdivision(&g, &wrong_kind));
    }

    #[test]
    fn shared_interior_vertex_is_rejected() {
        // K5 on 0..4 with two edges subdivided through the same vertex 5
        let mut edges: Vec<(usize, usize)> = Graph::complete(5).edges().collect();
        edges.retain(|&e| e != (0, 1) && e != (2, 3));
        edges.extend([(0, 5), (5, 1), (2, 5), (5, 3)]);
        let g = Graph::unlabeled(6, edges);
        let mut sub = Subdivision::direct(SubdivisionKind::K5, vec![0, 1, 2, 3, 4]);
        for p in &mut sub.paths {
            if p == &vec![0, 1] {
                *p = vec![0, 5, 1];
            } else if p == &vec![2, 3] {
                *p = vec![2, 5, 3];
            }
        }
        assert!(!verify_subdivision(&g, &sub));
    }

    #[test]
    fn subdivided_k33_witness() {
        // K3,3 with the edge 0-3 replaced by 0-6-3
        let mut edges: Vec<(usize, usize)> = Graph::complete_bipartite(3, 3).edges().collect();
        edges.retain(|&e| e != (0, 3));
        edges.extend([(0, 6), (6, 3)]);
        let g = Graph::unlabeled(7, edges);
        let mut sub = Subdivision::direct(SubdivisionKind::K33, vec![0, 1, 2, 3, 4, 5]);
        sub.paths[0] = vec![0, 6, 3];
        assert!(verify_subdivision(&g, &sub));
        // a path through a branch vertex is not internally disjoint
        sub.paths[0] = vec![0, 4, 3];
        assert!(!verify_subdivision(&g, &sub));
    }
}
