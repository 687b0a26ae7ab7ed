//! Vertex Folkman number search.
//!
//! The crate decides vertex arrowing `G →v (a_1, ..., a_s)`, generates every
//! maximal `K_q`-free graph with a given arrowing property (up to
//! isomorphism) by extending smaller families, and evaluates the numeric
//! lower bounds that follow from such enumerations.
//!
//! Layout:
//! - [`graph`]: compact graphs on at most 64 vertices and graph6 I/O
//! - [`clique`]: `ω`, `α`, `(+K_t)` tests, maximal `K_t`-free subsets
//! - [`arrowing`]: arrow vectors and the arrowing oracle
//! - [`canon`]: canonical labeling and deduplicated graph sets
//! - [`enumerate`]: exhaustive class generation for small orders
//! - [`search`]: edge-removal descent and the extension algorithms
//! - [`bounds`]: known constants and the bound calculus
//! - [`pipeline`]: declarative multi-step runs with checkpoints

pub mod arrowing;
pub mod bounds;
pub mod canon;
pub mod clique;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod pipeline;
pub mod search;

pub use arrowing::{arrows, find_free_partition, ArrowVector};
pub use canon::{canonical_form, CanonicalForm, GraphSet};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use search::FamilySpec;
