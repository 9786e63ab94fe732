//! Degree-based topological indices of graphs and their line graphs, Gromov
//! hyperbolicity of small graphs, and a harness that checks a catalog of
//! index inequalities over enumerated or sampled graphs.
//!
//! The arithmetic core is generic over [`Scalar`]; the aliases below fix the
//! concrete types used by the harness and the CLI.

pub mod canon;
pub mod error;
pub mod graph;
pub mod harness;
pub mod hyperbolicity;
pub mod index;
pub mod io;
pub mod line_graph;
pub mod scalar;
pub mod theorems;
pub mod value;

/// Exact rational used for every root-free quantity.
pub type Rational = num_rational::BigRational;

/// Indices with exact rationals and an `f64` geometric-arithmetic index.
pub type IndexVector = index::IndexVectorOf<Rational, f64>;

pub use canon::{canonical_form, canonical_form_with_cap, is_isomorphic, CanonicalKey};
pub use error::{Error, Result};
pub use graph::{Component, ComponentDecomposition, DegreeStats, Graph};
pub use harness::{
    enumerate_graphs, extremal_search, run_verification, run_verification_on, sample_gnp,
    EnumerationSpec, ExtremalClass, ExtremalGraph, ExtremalQuery, ExtremalResult, GraphSource,
    Objective,
};
pub use hyperbolicity::{
    hyperbolicity_constant, hyperbolicity_constant_with, HyperbolicityOptions, HyperbolicityResult,
};
pub use index::{compute_index_vector, compute_index_vector_in, evaluate_vdb_index, IndexVectorOf};
pub use line_graph::{line_graph, LineGraphResult};
pub use scalar::{RealScalar, Scalar};
pub use theorems::{
    check_theorem, BoundCheckResult, BoundKind, BoundPart, CheckContext, LemmaInstance, TheoremId,
};
pub use value::Value;
