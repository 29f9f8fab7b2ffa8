//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Each export returns a JSON string. The `*_json` functions hold the logic
//! and run natively too, which is how they are tested.

use idealgraph::closed_form::Property;
use idealgraph::deciders::{
    is_planar, outerplanarity, ring_report, OuterplanarCertificate, PlanarityCertificate, Subdivision,
    DEFAULT_CYCLE_CAP,
};
use idealgraph::export::ExportedGraph;
use idealgraph::harness::{figure_fixtures, valid_pairs, Decisions, FigureDocument};
use idealgraph::{predict, IdealGraph, ModulePair, Prediction};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest `m` the page accepts for a single graph.
pub const MAX_ANALYZE_M: u64 = 1_000_000;
/// Largest bound for the census table.
pub const MAX_CENSUS_M: u64 = 3000;

#[derive(Debug, Serialize)]
pub struct Analysis {
    pub graph: ExportedGraph,
    pub structural: Decisions,
    pub closed_form: Prediction,
    pub agreement: bool,
    pub planarity_witness: Option<Subdivision>,
    pub outerplanarity_witness: Option<Subdivision>,
    pub cycle_rank: usize,
    pub primitive_cycles: Option<Vec<Vec<u64>>>,
}

pub fn analyze_json(m: u64, n: u64) -> Result<String, String> {
    if m > MAX_ANALYZE_M {
        return Err(format!("m must be at most {MAX_ANALYZE_M}"));
    }
    let pair = ModulePair::new(m, n).map_err(|e| e.to_string())?;
    let g = IdealGraph::build(&pair);
    let planarity = is_planar(&g);
    let (outerplanar, outer_cert) = outerplanarity(&g);
    let ring = ring_report(&g, DEFAULT_CYCLE_CAP);
    let structural = Decisions {
        planar: planarity.planar,
        outerplanar,
        ring: ring.decision,
    };
    let closed_form = predict(&pair);
    let analysis = Analysis {
        graph: ExportedGraph::from_ideal_graph(&g),
        agreement: Property::ALL.iter().all(|&p| structural.get(p) == closed_form.get(p)),
        structural,
        closed_form,
        planarity_witness: match planarity.certificate {
            PlanarityCertificate::ForbiddenSubdivision(s) => Some(s),
            PlanarityCertificate::Embedding(_) => None,
        },
        outerplanarity_witness: match outer_cert {
            OuterplanarCertificate::ForbiddenSubdivision(s) => Some(s),
            OuterplanarCertificate::ApexEmbedding(_) => None,
        },
        cycle_rank: ring.cycle_rank,
        primitive_cycles: ring.primitive_cycles,
    };
    Ok(serde_json::to_string(&analysis).expect("plain data serializes"))
}

#[derive(Debug, Default, Serialize, PartialEq, Eq)]
pub struct Census {
    pub max_m: u64,
    pub pairs: usize,
    pub planar: usize,
    pub outerplanar: usize,
    pub ring: usize,
    /// `(m, n, property)` where structure and closed form differ.
    pub mismatches: Vec<(u64, u64, Property)>,
}

/// Structural counts over every pair up to `max_m`, with disagreements.
/// Runs on one thread so it works in the browser.
pub fn census_json(max_m: u64) -> Result<String, String> {
    if !(2..=MAX_CENSUS_M).contains(&max_m) {
        return Err(format!("max m must be between 2 and {MAX_CENSUS_M}"));
    }
    let mut census = Census {
        max_m,
        ..Census::default()
    };
    for (m, n) in valid_pairs(max_m) {
        let pair = ModulePair::new(m, n).expect("valid pair");
        let s = Decisions::structural(&IdealGraph::build(&pair));
        let p = predict(&pair);
        census.pairs += 1;
        census.planar += usize::from(s.planar);
        census.outerplanar += usize::from(s.outerplanar);
        census.ring += usize::from(s.ring);
        for q in Property::ALL {
            if s.get(q) != p.get(q) {
                census.mismatches.push((m, n, q));
            }
        }
    }
    Ok(serde_json::to_string(&census).expect("plain data serializes"))
}

/// The five figure documents over the given primes.
pub fn figures_json(p1: u64, p2: u64, p3: u64) -> Result<String, String> {
    let fixtures = figure_fixtures(p1, p2, p3).map_err(|e| e.to_string())?;
    let docs = fixtures
        .iter()
        .map(|f| FigureDocument::build(f).map_err(|d| format!("figure {} does not match: {d:?}", f.figure)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(serde_json::to_string(&docs).expect("plain data serializes"))
}

#[wasm_bindgen]
pub fn analyze(m: u32, n: u32) -> Result<String, JsError> {
    analyze_json(m.into(), n.into()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn census(max_m: u32) -> Result<String, JsError> {
    census_json(max_m.into()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn figures(p1: u32, p2: u32, p3: u32) -> Result<String, JsError> {
    figures_json(p1.into(), p2.into(), p3.into()).map_err(|e| JsError::new(&e))
}
