//! Chordless (primitive) cycles and the primitive cycle property.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("more than {cap} chordless cycles")]
pub struct CapExceeded {
    pub cap: usize,
}

/// All chordless cycles of length at least 3, each once, as label sequences
/// in canonical form (see [`canonical_cycle`]), sorted.
pub fn chordless_cycles(g: &Graph, cap: usize) -> Result<Vec<Vec<u64>>, CapExceeded> {
    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut on_path = vec![false; g.vertex_count()];
    for s in 0..g.vertex_count() {
        for &v1 in g.neighbors(s) {
            if v1 <= s {
                continue;
            }
            let mut path = vec![s, v1];
            on_path[s] = true;
            on_path[v1] = true;
            extend(g, &mut path, &mut on_path, &mut found, cap)?;
            on_path[s] = false;
            on_path[v1] = false;
        }
    }
    let mut cycles: Vec<Vec<u64>> = found
        .iter()
        .map(|c| canonical_cycle(&c.iter().map(|&v| g.label(v)).collect::<Vec<_>>()))
        .collect();
    cycles.sort();
    Ok(cycles)
}

/// Grows an induced path starting at its least vertex `path[0]`; closes it
/// into a cycle when the new vertex sees `path[0]`.
fn extend(
    g: &Graph,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    found: &mut Vec<Vec<usize>>,
    cap: usize,
) -> Result<(), CapExceeded> {
    let s = path[0];
    let last = path[path.len() - 1];
    for &w in g.neighbors(last) {
        if w <= s || on_path[w] {
            continue;
        }
        if path[1..path.len() - 1].iter().any(|&x| g.has_edge(x, w)) {
            continue;
        }
        if g.has_edge(w, s) {
            // each cycle is met in both directions; keep one
            if path[1] < w {
                if found.len() == cap {
                    return Err(CapExceeded { cap });
                }
                let mut cycle = path.clone();
                cycle.push(w);
                found.push(cycle);
            }
            continue;
        }
        path.push(w);
        on_path[w] = true;
        extend(g, path, on_path, found, cap)?;
        on_path[w] = false;
        path.pop();
    }
    Ok(())
}

/// Lexicographically least rotation or reflection of a cyclic sequence.
pub fn canonical_cycle(cycle: &[u64]) -> Vec<u64> {
    let k = cycle.len();
    let mut best: Option<Vec<u64>> = None;
    let mut reversed = cycle.to_vec();
    reversed.reverse();
    for seq in [cycle, &reversed[..]] {
        for start in 0..k {
            let candidate: Vec<u64> = (0..k).map(|i| seq[(start + i) % k]).collect();
            if best.as_ref().is_none_or(|b| candidate < *b) {
                best = Some(candidate);
            }
        }
    }
    best.unwrap_or_default()
}

fn cycle_edges(cycle: &[u64]) -> BTreeSet<(u64, u64)> {
    let k = cycle.len();
    (0..k)
        .map(|i| {
            let (a, b) = (cycle[i], cycle[(i + 1) % k]);
            (a.min(b), a.max(b))
        })
        .collect()
}

/// True iff any two of the given cycles share at most one edge.
pub fn primitive_cycle_property(cycles: &[Vec<u64>]) -> bool {
    let edge_sets: Vec<_> = cycles.iter().map(|c| cycle_edges(c)).collect();
    edge_sets
        .iter()
        .enumerate()
        .all(|(i, a)| edge_sets[i + 1..].iter().all(|b| a.intersection(b).nth(1).is_none()))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Every cycle by brute force over vertex permutations, then filtered to
    /// the chordless ones.
    fn brute_force_chordless(g: &Graph) -> Vec<Vec<u64>> {
        fn permutations(items: &[usize], k: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if prefix.len() == k {
                out.push(prefix.clone());
                return;
            }
            for &x in items {
                if !prefix.contains(&x) {
                    prefix.push(x);
                    permutations(items, k, prefix, out);
                    prefix.pop();
                }
            }
        }
        let n = g.vertex_count();
        let all: Vec<usize> = (0..n).collect();
        let mut result = BTreeSet::new();
        for k in 3..=n {
            let mut seqs = Vec::new();
            permutations(&all, k, &mut Vec::new(), &mut seqs);
            for seq in seqs {
                let is_cycle = (0..k).all(|i| g.has_edge(seq[i], seq[(i + 1) % k]));
                let chordless =
                    (0..k).all(|i| (i + 2..k).all(|j| (i == 0 && j == k - 1) || !g.has_edge(seq[i], seq[j])));
                if is_cycle && chordless {
                    result.insert(canonical_cycle(&seq.iter().map(|&v| g.label(v)).collect::<Vec<_>>()));
                }
            }
        }
        result.into_iter().collect()
    }

    #[test]
    fn triangle() {
        let g = Graph::cycle(3);
        assert_eq!(chordless_cycles(&g, 10).unwrap(), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn k4_has_four_triangles() {
        let g = Graph::complete(4);
        let cycles = chordless_cycles(&g, 100).unwrap();
        assert_eq!(cycles.len(), 4);
        assert!(cycles.iter().all(|c| c.len() == 3));
        assert_eq!(cycles, brute_force_chordless(&g));
    }

    #[test]
    fn fig4_graph() {
        let g = Graph::from_labeled_edges(
            vec![2, 3, 5, 6, 10, 15],
            [
                (2, 3),
                (2, 5),
                (3, 5),
                (2, 6),
                (3, 6),
                (2, 10),
                (5, 10),
                (3, 15),
                (5, 15),
            ],
        )
        .unwrap();
        let cycles = chordless_cycles(&g, 100).unwrap();
        assert_eq!(cycles, brute_force_chordless(&g));
        assert_eq!(
            cycles,
            vec![vec![2, 3, 5], vec![2, 3, 6], vec![2, 5, 10], vec![3, 5, 15]]
        );
        assert!(primitive_cycle_property(&cycles));
    }

    #[test]
    fn brute_force_agreement_on_small_graphs() {
        let graphs = [
            Graph::complete_bipartite(2, 3),
            Graph::complete_bipartite(3, 3),
            Graph::complete(5),
            Graph::cycle(6),
            Graph::unlabeled(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3), (1, 4)]),
        ];
        for g in &graphs {
            assert_eq!(chordless_cycles(g, 1000).unwrap(), brute_force_chordless(g));
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(chordless_cycles(&Graph::complete(5), 3), Err(CapExceeded { cap: 3 }));
        assert_eq!(chordless_cycles(&Graph::complete(5), 10).unwrap().len(), 10);
    }

    #[test]
    fn pcp_examples() {
        assert!(primitive_cycle_property(&[vec![1, 2, 3], vec![1, 2, 4]]));
        // 4-cycles 1-2-3-4 and 1-2-3-5 share edges 1-2 and 2-3
        assert!(!primitive_cycle_property(&[vec![1, 2, 3, 4], vec![1, 2, 3, 5]]));
    }

    #[test]
    fn canonical_form() {
        assert_eq!(canonical_cycle(&[5, 3, 9, 2]), vec![2, 5, 3, 9]);
        assert_eq!(canonical_cycle(&[3, 1, 2]), vec![1, 2, 3]);
    }
}
