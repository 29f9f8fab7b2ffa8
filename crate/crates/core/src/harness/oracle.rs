//! Adjacency computed from the module action itself: `dZ_m` acts on `Z_n`
//! with image the cyclic subgroup generated by `d mod n`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::arith::{lcm, ModulePair};

/// `{ d·t mod n : t = 0..n-1 }`.
pub fn cyclic_subgroup(d: u64, pair: &ModulePair) -> BTreeSet<u64> {
    let n = pair.n().value();
    let step = u128::from(d % n);
    (0..u128::from(n)).map(|t| (step * t % u128::from(n)) as u64).collect()
}

/// Whether the images of `d1 Z_m` and `d2 Z_m` in `Z_n` meet outside zero.
pub fn oracle_adjacent(d1: u64, d2: u64, pair: &ModulePair) -> bool {
    let a = cyclic_subgroup(d1, pair);
    let b = cyclic_subgroup(d2, pair);
    a.intersection(&b).any(|&x| x != 0)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdjacencyAudit {
    pub pairs_checked: usize,
    pub adjacent_pairs: usize,
    /// Vertex pairs where the subgroup test and the lcm rule disagree.
    pub disagreements: Vec<(u64, u64)>,
}

impl AdjacencyAudit {
    pub fn holds(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Compares the subgroup-intersection test with `n ∤ lcm(d1, d2)` on every
/// pair of distinct vertices.
pub fn verify_adjacency_criterion(pair: &ModulePair) -> AdjacencyAudit {
    let n = pair.n().value();
    let vertices = pair.m().proper_nontrivial_divisors();
    let images: Vec<BTreeSet<u64>> = vertices.iter().map(|&d| cyclic_subgroup(d, pair)).collect();
    let mut audit = AdjacencyAudit {
        pairs_checked: 0,
        adjacent_pairs: 0,
        disagreements: Vec::new(),
    };
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            let by_action = images[i].intersection(&images[j]).any(|&x| x != 0);
            let by_lcm = !lcm(vertices[i], vertices[j]).is_multiple_of(n);
            audit.pairs_checked += 1;
            audit.adjacent_pairs += usize::from(by_action);
            if by_action != by_lcm {
                audit.disagreements.push((vertices[i], vertices[j]));
            }
        }
    }
    audit
}
