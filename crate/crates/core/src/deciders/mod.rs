//! Structural deciders: certified planarity, outerplanarity and ring-graph
//! status.

pub mod certificate;
pub mod cycles;
pub mod outerplanar;
pub mod planarity;
pub mod ring;
pub mod series_parallel;

pub use certificate::{
    verify_certificate, verify_embedding, verify_subdivision, PlanarityCertificate, RotationSystem, Subdivision,
    SubdivisionKind,
};
pub use cycles::{canonical_cycle, chordless_cycles, primitive_cycle_property, CapExceeded};
pub use outerplanar::{is_outerplanar, outerplanarity, verify_outerplanar_certificate, OuterplanarCertificate};
pub use planarity::{is_planar, planar_embedding, test_planar, PlanarityResult};
pub use ring::{cycle_rank, is_ring_graph, ring_report, RingReport, DEFAULT_CYCLE_CAP};
pub use series_parallel::has_k4_subdivision;
