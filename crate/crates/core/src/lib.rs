//! Exact, desk-scale toolkit for k-defective graph colouring and exhaustive
//! search over triangle-free (planar) graphs.
//!
//! A k-defective colouring partitions the vertices into classes whose induced
//! subgraphs have maximum degree at most k; `chi_k` is the least number of
//! classes needed. The crate provides the graph plumbing (bitmask graphs,
//! graph6 I/O, canonical forms), exact solvers and oracles for defective
//! colourability, exact planarity testing with combinatorial embeddings, an
//! exhaustive isomorph-free generator for triangle-free graphs up to order 12,
//! a catalog of the extremal graphs this machinery uncovers, and a claim
//! verifier that re-derives every headline number from scratch.

pub mod canon;
pub mod catalog;
pub mod colour;
pub mod enumerate;
pub mod formats;
pub mod graph;
pub mod planar;
pub mod verify;

pub use canon::{are_isomorphic, canonical_form, find_deletion_isomorph, CanonicalForm};
pub use catalog::{builtin, names, CatalogEntry, CatalogError, Provenance};
pub use colour::{
    chi_k, enumerate_colourings, is_edge_critical, is_mk_colourable, is_vertex_critical,
    lovasz_bound, validate_colouring, z3_oracle, ColourError, ColouringAssignment, Z3Assignment,
};
pub use enumerate::{
    brute_force_enumerate, enumerate_triangle_free, extremal_search, smallest_extremal_order,
    ChiCmp, ChiFilter, EnumerateError, EnumerationStats, SearchConfig,
};
pub use formats::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6, to_dot, FormatError};
pub use planar::{
    face_arithmetic_audit, face_profile, is_maximal_tfp, is_planar, planar_embedding,
    FaceArithmeticAudit, FaceProfile, PlanarError, RotationSystem,
};
pub use graph::{GraphError, SmallGraph, VertexSet, MAX_VERTICES};
pub use verify::{VerificationReport, Verifier, VerifyError, CLAIM_IDS};
