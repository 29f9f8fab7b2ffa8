//! Ring graphs: `rank(G) = frank(G)`, equivalently the primitive cycle
//! property together with no K4 subdivision.

use serde::{Deserialize, Serialize};

use super::cycles::{chordless_cycles, primitive_cycle_property};
use super::planarity::test_planar;
use super::series_parallel::has_k4_subdivision;
use crate::graph::Graph;

pub const DEFAULT_CYCLE_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingReport {
    /// `|E| - |V| + r` with `r` the number of components.
    pub cycle_rank: usize,
    /// Number of chordless cycles; absent when enumeration was skipped or capped.
    pub free_rank: Option<usize>,
    pub pcp_holds: Option<bool>,
    pub k4_subdivision_free: bool,
    pub planar: bool,
    pub decision: bool,
    pub primitive_cycles: Option<Vec<Vec<u64>>>,
}

impl RingReport {
    /// `rank = frank`, when the free rank is known.
    pub fn rank_equals_free_rank(&self) -> Option<bool> {
        self.free_rank.map(|f| f == self.cycle_rank)
    }

    /// `rank <= frank` and `(rank = frank) <=> (PCP and no K4 subdivision)`,
    /// checked whenever both sides are available.
    pub fn is_consistent(&self) -> bool {
        match (self.free_rank, self.pcp_holds) {
            (Some(frank), Some(pcp)) => {
                self.cycle_rank <= frank
                    && (frank == self.cycle_rank) == (pcp && self.k4_subdivision_free)
                    && self.decision == (pcp && self.k4_subdivision_free)
            }
            _ => true,
        }
    }
}

pub fn cycle_rank(g: &Graph) -> usize {
    g.edge_count() + g.component_count() - g.vertex_count()
}

pub fn is_ring_graph(g: &Graph) -> (bool, RingReport) {
    let report = ring_report(g, DEFAULT_CYCLE_CAP);
    (report.decision, report)
}

pub fn ring_report(g: &Graph, cap: usize) -> RingReport {
    let cycle_rank = cycle_rank(g);
    let k4_subdivision_free = !has_k4_subdivision(g);
    let planar = test_planar(g);
    if !planar {
        return RingReport {
            cycle_rank,
            free_rank: None,
            pcp_holds: None,
            k4_subdivision_free,
            planar,
            decision: false,
            primitive_cycles: None,
        };
    }
    match chordless_cycles(g, cap) {
        Ok(cycles) => {
            let pcp = primitive_cycle_property(&cycles);
            RingReport {
                cycle_rank,
                free_rank: Some(cycles.len()),
                pcp_holds: Some(pcp),
                k4_subdivision_free,
                planar,
                decision: pcp && k4_subdivision_free,
                primitive_cycles: Some(cycles),
            }
        }
        // more primitive cycles than the cycle rank rules out a ring graph
        Err(_) => RingReport {
            cycle_rank,
            free_rank: None,
            pcp_holds: None,
            k4_subdivision_free,
            planar,
            decision: if cap > cycle_rank { false } else { k4_subdivision_free },
            primitive_cycles: None,
        },
    }
}
