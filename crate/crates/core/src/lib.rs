//! Graded and nongraded cancellation properties of Leavitt path algebras of
//! finite directed graphs.
//!
//! The crate decides graded unit-regularity and its relatives from graph
//! structure, builds graded matricial representations of `L_K(E)` for
//! no-exit graphs, canonicalizes shifted matrix algebras, and ships an
//! exhaustive prime-field oracle that checks the closed-form matrix criteria
//! on small instances.

pub mod analysis;
pub mod classify;
pub mod error;
pub mod field;
pub mod graph;
pub mod matching;
pub mod oracle;
pub mod rep;
pub mod shifts;

pub use analysis::{CycleData, ResidueCounts};
pub use classify::{classify, Property, PropertyReport};
pub use error::{AnalysisError, GraphError, OracleError, ShiftError};
pub use graph::{parse_graph, Edge, EdgeId, Graph, GraphFormat, VertexId};
pub use rep::{build_rep, BlockKind, GradedMatricialRep, Provenance, ShiftBlock};
pub use shifts::{CanonicalBlock, ComponentSupport, UrVerdict};
