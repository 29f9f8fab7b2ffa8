//! Planarity by path addition (Demoucron-Malgrange-Pertuiset) on each
//! biconnected block, producing a rotation system, with Kuratowski witness
//! extraction for non-planar graphs.

use std::collections::{BTreeMap, VecDeque};

use super::certificate::{PlanarityCertificate, RotationSystem, Subdivision, SubdivisionKind};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarityResult {
    pub planar: bool,
    pub certificate: PlanarityCertificate,
}

/// Decides planarity. Planar graphs come with an embedding, non-planar ones
/// with a K5 or K3,3 subdivision.
pub fn is_planar(g: &Graph) -> PlanarityResult {
    match planar_embedding(g) {
        Some(rot) => PlanarityResult {
            planar: true,
            certificate: PlanarityCertificate::Embedding(rot),
        },
        None => PlanarityResult {
            planar: false,
            certificate: PlanarityCertificate::ForbiddenSubdivision(kuratowski_subdivision(g)),
        },
    }
}

/// Boolean planarity test without building certificates.
pub fn test_planar(g: &Graph) -> bool {
    let active = g.vertex_count() - g.isolated_vertices().len();
    if active >= 3 && g.edge_count() > 3 * active - 6 {
        return false;
    }
    g.blocks().iter().all(|block| embed_block(block).is_some())
}

/// A rotation system of `g` if `g` is planar.
pub fn planar_embedding(g: &Graph) -> Option<RotationSystem> {
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
    for block in g.blocks() {
        let local = embed_block(&block)?;
        for (v, rot) in local {
            rotation[v].extend(rot);
        }
    }
    Some(RotationSystem {
        rotations: rotation
            .into_iter()
            .enumerate()
            .map(|(v, rot)| (g.label(v), rot.into_iter().map(|w| g.label(w)).collect()))
            .collect(),
    })
}

/// Embeds one biconnected block given by its edges (global indices).
/// Returns the rotation at each block vertex, or `None` if not planar.
fn embed_block(edges: &[(usize, usize)]) -> Option<Vec<(usize, Vec<usize>)>> {
    if let [(u, v)] = edges {
        return Some(vec![(*u, vec![*v]), (*v, vec![*u])]);
    }
    let mut global: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    global.sort_unstable();
    global.dedup();
    let local: BTreeMap<usize, usize> = global.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let n = global.len();
    if edges.len() > 3 * n - 6 {
        return None;
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        let (a, b) = (local[&u], local[&v]);
        adj[a].push(b);
        adj[b].push(a);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let faces = PathAddition::new(&adj).run()?;
    let rot = rotation_from_faces(&adj, &faces);
    Some(
        rot.into_iter()
            .enumerate()
            .map(|(v, r)| (global[v], r.into_iter().map(|w| global[w]).collect()))
            .collect(),
    )
}

/// Each face `... u v w ...` fixes `w` as the successor of `u` around `v`.
fn rotation_from_faces(adj: &[Vec<usize>], faces: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut succ: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for face in faces {
        let k = face.len();
        for i in 0..k {
            let (u, v, w) = (face[i], face[(i + 1) % k], face[(i + 2) % k]);
            succ.insert((v, u), w);
        }
    }
    adj.iter()
        .enumerate()
        .map(|(v, nbrs)| {
            let Some(&start) = nbrs.first() else {
                return Vec::new();
            };
            let mut rot = vec![start];
            let mut cur = start;
            while let Some(&next) = succ.get(&(v, cur)) {
                if next == start || rot.len() > nbrs.len() {
                    break;
                }
                rot.push(next);
                cur = next;
            }
            rot
        })
        .collect()
}

enum Fragment {
    Edge(usize, usize),
    Component {
        attachments: Vec<usize>,
        members: Vec<bool>,
    },
}

impl Fragment {
    fn attachments(&self) -> Vec<usize> {
        match self {
            Fragment::Edge(u, v) => vec![*u, *v],
            Fragment::Component { attachments, .. } => attachments.clone(),
        }
    }
}

/// State of the path-addition embedder on a biconnected graph.
struct PathAddition<'a> {
    adj: &'a [Vec<usize>],
    n: usize,
    in_h: Vec<bool>,
    edge_in_h: Vec<bool>,
    embedded_edges: usize,
    total_edges: usize,
    faces: Vec<Vec<usize>>,
}

impl<'a> PathAddition<'a> {
    fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        Self {
            adj,
            n,
            in_h: vec![false; n],
            edge_in_h: vec![false; n * n],
            embedded_edges: 0,
            total_edges: adj.iter().map(Vec::len).sum::<usize>() / 2,
            faces: Vec::new(),
        }
    }

    fn mark_path(&mut self, path: &[usize]) {
        for &v in path {
            self.in_h[v] = true;
        }
        for w in path.windows(2) {
            self.edge_in_h[w[0] * self.n + w[1]] = true;
            self.edge_in_h[w[1] * self.n + w[0]] = true;
            self.embedded_edges += 1;
        }
    }

    fn run(mut self) -> Option<Vec<Vec<usize>>> {
        let cycle = find_cycle(self.adj)?;
        let mut closed = cycle.clone();
        closed.push(cycle[0]);
        self.mark_path(&closed);
        let mut reversed = cycle.clone();
        reversed.reverse();
        self.faces = vec![cycle, reversed];

        while self.embedded_edges < self.total_edges {
            let fragments = self.fragments();
            let face_sets: Vec<Vec<bool>> = self
                .faces
                .iter()
                .map(|f| {
                    let mut set = vec![false; self.n];
                    for &v in f {
                        set[v] = true;
                    }
                    set
                })
                .collect();
            let mut choice: Option<(usize, usize)> = None;
            for (i, frag) in fragments.iter().enumerate() {
                let att = frag.attachments();
                let admissible: Vec<usize> = (0..self.faces.len())
                    .filter(|&f| att.iter().all(|&a| face_sets[f][a]))
                    .collect();
                match admissible.len() {
                    0 => return None,
                    1 => {
                        choice = Some((i, admissible[0]));
                        break;
                    }
                    _ if choice.is_none() => choice = Some((i, admissible[0])),
                    _ => {}
                }
            }
            let (frag, face) = choice?;
            let path = self.fragment_path(&fragments[frag]);
            self.split_face(face, &path);
            self.mark_path(&path);
        }
        Some(self.faces)
    }

    fn fragments(&self) -> Vec<Fragment> {
        let mut out = Vec::new();
        for u in 0..self.n {
            if !self.in_h[u] {
                continue;
            }
            for &v in &self.adj[u] {
                if v > u && self.in_h[v] && !self.edge_in_h[u * self.n + v] {
                    out.push(Fragment::Edge(u, v));
                }
            }
        }
        let mut seen = self.in_h.clone();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut members = vec![false; self.n];
            members[start] = true;
            let mut attach = vec![false; self.n];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if self.in_h[w] {
                        attach[w] = true;
                    } else if !seen[w] {
                        seen[w] = true;
                        members[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            let attachments = (0..self.n).filter(|&v| attach[v]).collect();
            out.push(Fragment::Component { attachments, members });
        }
        out
    }

    /// A path through the fragment joining two of its attachment vertices.
    fn fragment_path(&self, frag: &Fragment) -> Vec<usize> {
        match frag {
            Fragment::Edge(u, v) => vec![*u, *v],
            Fragment::Component { attachments, members } => {
                let (a, b) = (attachments[0], attachments[1]);
                let mut parent = vec![usize::MAX; self.n];
                let mut queue = VecDeque::new();
                for &w in &self.adj[a] {
                    if members[w] {
                        parent[w] = a;
                        queue.push_back(w);
                    }
                }
                while let Some(x) = queue.pop_front() {
                    if self.adj[x].binary_search(&b).is_ok() {
                        let mut path = vec![b, x];
                        let mut cur = x;
                        while parent[cur] != a {
                            cur = parent[cur];
                            path.push(cur);
                        }
                        path.push(a);
                        path.reverse();
                        return path;
                    }
                    for &y in &self.adj[x] {
                        if members[y] && parent[y] == usize::MAX {
                            parent[y] = x;
                            queue.push_back(y);
                        }
                    }
                }
                unreachable!("fragment of a biconnected graph connects its attachments")
            }
        }
    }

    /// Replaces face `f` by the two faces created by drawing `path` inside it.
    fn split_face(&mut self, f: usize, path: &[usize]) {
        let face = std::mem::take(&mut self.faces[f]);
        let k = face.len();
        let a = path[0];
        let b = path[path.len() - 1];
        let i = face.iter().position(|&x| x == a).expect("attachment on face");
        let j = face.iter().position(|&x| x == b).expect("attachment on face");
        let interior = &path[1..path.len() - 1];

        let walk = |from: usize, to: usize| {
            let mut out = vec![face[from]];
            let mut p = from;
            while p != to {
                p = (p + 1) % k;
                out.push(face[p]);
            }
            out
        };
        let mut first = walk(i, j);
        first.extend(interior.iter().rev());
        let mut second = walk(j, i);
        second.extend(interior.iter());
        self.faces[f] = first;
        self.faces.push(second);
    }
}

fn find_cycle(adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    depth[0] = 0;
    let mut stack = vec![(0usize, 0usize)];
    while let Some(&mut (u, ref mut pos)) = stack.last_mut() {
        if *pos == adj[u].len() {
            stack.pop();
            continue;
        }
        let w = adj[u][*pos];
        *pos += 1;
        if depth[w] == usize::MAX {
            depth[w] = depth[u] + 1;
            parent[w] = u;
            stack.push((w, 0));
        } else if w != parent[u] && depth[w] < depth[u] {
            let mut cycle = vec![u];
            let mut cur = u;
            while cur != w {
                cur = parent[cur];
                cycle.push(cur);
            }
            cycle.reverse();
            return Some(cycle);
        }
    }
    None
}

/// Lexicographically first `k`-clique, by vertex index.
pub(crate) fn find_clique(g: &Graph, k: usize) -> Option<Vec<usize>> {
    fn extend(g: &Graph, k: usize, clique: &mut Vec<usize>, candidates: &[usize]) -> bool {
        if clique.len() == k {
            return true;
        }
        for (i, &v) in candidates.iter().enumerate() {
            if candidates.len() - i < k - clique.len() {
                return false;
            }
            let next: Vec<usize> = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|&w| g.has_edge(v, w))
                .collect();
            clique.push(v);
            if extend(g, k, clique, &next) {
                return true;
            }
            clique.pop();
        }
        false
    }
    let candidates: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.degree(v) + 1 >= k).collect();
    let mut clique = Vec::with_capacity(k);
    extend(g, k, &mut clique, &candidates).then_some(clique)
}

/// An edge-minimal spanning subgraph of `g` still satisfying `property`,
/// which must be preserved under adding edges and hold for `g` itself.
pub(crate) fn minimal_edge_set(g: &Graph, property: impl Fn(&Graph) -> bool) -> Vec<(usize, usize)> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let holds = |set: &[(usize, usize)]| property(&g.spanning_subgraph(set));
    // shortest prefix with the property; its last edge is essential
    let (mut lo, mut hi) = (0usize, edges.len());
    while lo < hi {
        let mid = (lo + hi) / 2;
        if holds(&edges[..mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let mut kept: Vec<(usize, usize)> = edges[..lo].to_vec();
    let mut i = 0;
    while i + 1 < kept.len() {
        let e = kept.remove(i);
        if !holds(&kept) {
            kept.insert(i, e);
            i += 1;
        }
    }
    kept
}

/// Reads off branch vertices and paths of an edge-minimal forbidden
/// subgraph. Branch vertices are ordered so that bipartite kinds list their
/// smaller side first.
pub(crate) fn subdivision_from_minimal(g: &Graph, edges: &[(usize, usize)]) -> Option<Subdivision> {
    let h = g.spanning_subgraph(edges);
    let branch: Vec<usize> = (0..h.vertex_count()).filter(|&v| h.degree(v) >= 3).collect();
    let is_branch = |v: usize| h.degree(v) >= 3;
    let mut paths: Vec<Vec<usize>> = Vec::new();
    for &b in &branch {
        for &first in h.neighbors(b) {
            let mut path = vec![b, first];
            let (mut prev, mut cur) = (b, first);
            while !is_branch(cur) {
                let &next = h.neighbors(cur).iter().find(|&&x| x != prev)?;
                path.push(next);
                prev = cur;
                cur = next;
            }
            if b < cur {
                paths.push(path);
            }
        }
    }
    let labels = |p: &[usize]| p.iter().map(|&v| g.label(v)).collect::<Vec<_>>();

    let (kind, branch_order): (SubdivisionKind, Vec<usize>) = match branch.len() {
        5 => (SubdivisionKind::K5, branch.clone()),
        4 => (SubdivisionKind::K4, branch.clone()),
        6 => {
            let side_a: Vec<usize> = branch
                .iter()
                .copied()
                .filter(|&v| v == branch[0] || !paths.iter().any(|p| joins(p, branch[0], v)))
                .collect();
            let mut order = side_a.clone();
            order.extend(branch.iter().copied().filter(|v| !side_a.contains(v)));
            (SubdivisionKind::K33, order)
        }
        2 => {
            // theta graph: three paths between the two degree-3 vertices,
            // each split at its first interior vertex
            let mut order = branch.clone();
            let mut split = Vec::new();
            for p in &paths {
                let mid = *p.get(1).filter(|_| p.len() >= 3)?;
                order.push(mid);
                split.push(labels(&p[..2]));
                split.push(labels(&p[1..]));
            }
            return Some(Subdivision {
                kind: SubdivisionKind::K23,
                branch_vertices: labels(&order),
                paths: split,
            });
        }
        _ => return None,
    };
    Some(Subdivision {
        kind,
        branch_vertices: labels(&branch_order),
        paths: paths.iter().map(|p| labels(p)).collect(),
    })
}

fn joins(path: &[usize], a: usize, b: usize) -> bool {
    let (s, t) = (path[0], path[path.len() - 1]);
    (s == a && t == b) || (s == b && t == a)
}

/// K5 or K3,3 subdivision in a non-planar graph.
pub fn kuratowski_subdivision(g: &Graph) -> Subdivision {
    if let Some(clique) = find_clique(g, 5) {
        return Subdivision::direct(SubdivisionKind::K5, clique.iter().map(|&v| g.label(v)).collect());
    }
    let edges = minimal_edge_set(g, |h| !test_planar(h));
    subdivision_from_minimal(g, &edges).expect("edge-minimal non-planar graph is a Kuratowski subdivision")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deciders::certificate::{verify_certificate, verify_subdivision};

    fn check(g: &Graph) -> PlanarityResult {
        let r = is_planar(g);
        assert!(verify_certificate(g, &r.certificate), "{g:?}");
        assert_eq!(r.planar, test_planar(g));
        r
    }

    #[test]
    fn k5_is_its_own_witness() {
        let r = check(&Graph::complete(5));
        assert!(!r.planar);
        match r.certificate {
            PlanarityCertificate::ForbiddenSubdivision(s) => {
                assert_eq!(s.kind, SubdivisionKind::K5);
                assert_eq!(s.branch_vertices, vec![0, 1, 2, 3, 4]);
            }
            _ => panic!("expected witness"),
        }
    }

    #[test]
    fn k33_and_petersen() {
        let r = check(&Graph::complete_bipartite(3, 3));
        assert!(!r.planar);
        let PlanarityCertificate::ForbiddenSubdivision(s) = r.certificate else {
            panic!()
        };
        assert_eq!(s.kind, SubdivisionKind::K33);

        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        let petersen = Graph::unlabeled(10, edges);
        let r = check(&petersen);
        assert!(!r.planar);
    }

    #[test]
    fn planar_families() {
        for n in 0..8 {
            assert!(check(&Graph::complete(n.min(4))).planar);
            assert!(check(&Graph::unlabeled(n, [])).planar);
        }
        assert!(check(&Graph::cycle(7)).planar);
        assert!(check(&Graph::complete_bipartite(2, 6)).planar);
        // octahedron
        let oct = Graph::unlabeled(
            6,
            (0..6)
                .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
                .filter(|&(u, v)| v != u + 3 || u >= 3),
        );
        assert_eq!(oct.edge_count(), 12);
        assert!(check(&oct).planar);
        // wheel with 8 spokes
        let wheel = Graph::unlabeled(9, (0..8).flat_map(|i| [(i, (i + 1) % 8), (i, 8)]));
        assert!(check(&wheel).planar);
    }

    #[test]
    fn embedding_face_count() {
        let g = Graph::from_labeled_edges(vec![2, 3, 6, 9], [(2, 3), (2, 6), (3, 6), (3, 9)]).unwrap();
        let rot = planar_embedding(&g).unwrap();
        assert_eq!(rot.face_count(&g), Some(2));
        let g = Graph::unlabeled(4, [(0, 1), (1, 2), (1, 3)]);
        assert_eq!(planar_embedding(&g).unwrap().face_count(&g), Some(1));
    }

    #[test]
    fn subdivided_k5_is_found() {
        let mut edges: Vec<(usize, usize)> = Graph::complete(5).edges().collect();
        edges.retain(|&e| e != (0, 1) && e != (3, 4));
        edges.extend([(0, 5), (5, 6), (6, 1), (3, 7), (7, 4), (2, 8)]);
        let g = Graph::unlabeled(9, edges);
        let r = check(&g);
        let PlanarityCertificate::ForbiddenSubdivision(s) = r.certificate else {
            panic!()
        };
        assert_eq!(s.kind, SubdivisionKind::K5);
        assert!(!s.is_direct());
        assert!(verify_subdivision(&g, &s));
    }

    #[test]
    fn clique_search() {
        let g = Graph::complete(6);
        assert_eq!(find_clique(&g, 5), Some(vec![0, 1, 2, 3, 4]));
        assert_eq!(find_clique(&Graph::cycle(5), 3), None);
        assert_eq!(find_clique(&Graph::cycle(3), 3), Some(vec![0, 1, 2]));
    }
}
