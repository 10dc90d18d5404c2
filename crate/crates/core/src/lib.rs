//! Exact metric dimension and unique metric bases of small connected
//! graphs: bit-parallel solving, family constructions, and an exhaustive
//! falsification harness for the known bounds.

pub mod constructions;
pub mod dist;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod solver;
pub mod twins;
pub mod verifier;

pub use dist::{diameter, distances, gamma, girth, DistanceMatrix, Girth};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use graph6::{emit_graph6, parse_graph6};
pub use solver::{all_bases, is_uniquely_dimensional, metric_dimension, BasisReport, Resolver};
pub use twins::{twin_classes, TwinClasses};
