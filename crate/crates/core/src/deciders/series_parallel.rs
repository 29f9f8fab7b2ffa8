//! K4-subdivision detection: a simple graph has no K4 subdivision iff every
//! biconnected block reduces to a single edge under series and parallel
//! reductions.

use std::collections::{BTreeMap, BTreeSet};

use crate::graph::Graph;

pub fn has_k4_subdivision(g: &Graph) -> bool {
    g.blocks().iter().any(|block| !is_series_parallel_block(block))
}

fn is_series_parallel_block(edges: &[(usize, usize)]) -> bool {
    // parallel edges merge on insertion into the neighbor sets
    let mut adj: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for &(u, v) in edges {
        adj.entry(u).or_default().insert(v);
        adj.entry(v).or_default().insert(u);
    }
    let mut queue: Vec<usize> = adj.iter().filter(|(_, n)| n.len() == 2).map(|(&v, _)| v).collect();
    while let Some(v) = queue.pop() {
        if adj.len() <= 2 {
            break;
        }
        let Some(nbrs) = adj.get(&v) else { continue };
        if nbrs.len() != 2 {
            continue;
        }
        let mut it = nbrs.iter().copied();
        let (a, b) = (it.next().unwrap(), it.next().unwrap());
        adj.remove(&v);
        for (x, y) in [(a, b), (b, a)] {
            let set = adj.get_mut(&x).expect("neighbor present");
            set.remove(&v);
            set.insert(y);
            if set.len() == 2 {
                queue.push(x);
            }
        }
    }
    adj.len() <= 2
}
