//! Irreducibly odd graphs: property checks, augmentation, structural
//! witnesses, exhaustive censuses and chord diagram certificates.
//!
//! Graphs have at most 64 vertices and use one bitset row per vertex.

pub mod bitset;
pub mod chord;
pub mod construct;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod oddness;
pub mod structure;

pub use error::{Error, Result};
pub use graph::{canonical_form, emit_graph6, parse_graph6, CanonicalForm, Graph};
pub use oddness::{is_irreducibly_even, is_irreducibly_odd, is_odd, Parity};
