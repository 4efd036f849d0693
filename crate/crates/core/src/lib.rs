//! Graph minors for small simple graphs: canonical forms, minor testing,
//! named constructions, and closure-style generation.

pub mod bits;
pub mod canon;
pub mod catalog;
pub mod certificate;
pub mod constructions;
pub mod error;
pub mod format;
pub mod generate;
pub mod graph;
pub mod minor;
pub mod predicate;
pub mod tables;

pub use bits::VertexSet;
pub use canon::{are_isomorphic, canonical_form, canonical_graph, CanonKey, CanonicalForm};
pub use certificate::verify_minor_model;
pub use error::{ConstructionError, FormatError, GenerateError, GraphError, MinorError, PredicateError};
pub use graph::{Graph, Separation, MAX_ORDER};
pub use minor::{find_minor_model, has_minor, is_planar, MinorModel, Pattern};
pub use predicate::Predicate;
