//! Uniform hypergraphs and the spectral radius of their adjacency tensors.
//!
//! The crate is `no_std` (it needs `alloc`). Enabling the `parallel` feature
//! (the default) pulls in `std` and spreads enumeration and batched spectral
//! solves over a rayon pool; results are identical either way.
//!
//! Layout:
//! - [`hypergraph`]: the k-uniform [`Hypergraph`] type and structural queries.
//! - [`constructions`]: simple graphs, k-th powers and the named extremal families.
//! - [`spectral`]: bracketed power iteration for the spectral radius and Perron vector.
//! - [`transforms`]: edge moving, gluing and subgraph relocation.
//! - [`canon`]: canonical forms for isomorphism testing.
//! - [`enumerate`]: isomorph-free class generation and brute-force maximizers.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod canon;
pub mod constructions;
pub mod enumerate;
pub mod hypergraph;
pub mod spectral;
pub mod transforms;

mod util;

pub use canon::{canonical_form, canonical_labeling, is_isomorphic, CanonError, CanonicalForm};
pub use constructions::{ConstructionError, SimpleGraph};
pub use enumerate::{
    argmax_rho, dominating_vertex, enumerate_class, Budget, ClassFilter, EnumError, EnumOptions,
    MaxReport,
};
pub use hypergraph::{Classification, Girth, Hypergraph, HypergraphError, VertexId};
pub use spectral::{Bracket, PerronResult, RadiusOrder, SolverOptions, SpectralError};
pub use transforms::{EdgeMove, TransformError};
