//! Intersection graphs `G_n(Z_m)` of ideals of `Z_m` relative to the module
//! `Z_n`.
//!
//! Structural deciders answer with checkable certificates. The closed form
//! answers from the exponent patterns of `m` and `n` alone, and the harness
//! compares the two exhaustively.

pub mod arith;
pub mod closed_form;
pub mod deciders;
pub mod export;
pub mod graph;
pub mod harness;

pub use arith::{factorize, ArithError, Factorization, ModulePair};
pub use closed_form::{predict, ClosedFormTables, Prediction, Property};
pub use graph::{Graph, GraphError, IdealGraph};
