//! Enumeration and classification of codimension-one gradient flows on the
//! sphere.
//!
//! A Morse gradient flow on the sphere is described by the graph of its
//! stable manifolds: sources are vertices, saddles are edges and sinks are
//! faces. A codimension-one flow is the same graph with one selected element
//! (see [`marks`]). This crate generates every such graph with a few edges,
//! enumerates the marked structures up to homeomorphism, realizes each one as
//! a separatrix diagram, and tabulates the resulting census.

pub mod catalog;
pub mod combmap;
pub mod generate;
pub mod marks;
pub mod realize;

pub use combmap::{
    are_equivalent, canonical_code, CanonicalCode, Cells, CombinatorialMap, Dart, Embedded,
    Equivalence, MapError,
};
pub use generate::{generate_maps, generate_maps_with_degree3_vertex, GenerationConfig, MapClass};
pub use marks::{
    enumerate_sink_marks, enumerate_source_marks, enumerate_t_marks, reverse, saddle_node_census,
    Mark, MarkKind, MarkedClass, MarkedMap,
};
pub use realize::{realize, PointKind, PointSummary, SeparatrixDiagram};
