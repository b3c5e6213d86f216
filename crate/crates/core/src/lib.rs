//! Exact combinatorics of Fano-plane-free 3-uniform hypergraphs.
//!
//! The crate provides:
//!
//! - a hypergraph/multigraph data model with canonical generators and a
//!   plain-text interchange format ([`hypergraph`], [`multigraph`]);
//! - subhypergraph embedding, link multigraphs and the Fano-forcing
//!   configuration checks, all emitting machine-verifiable witnesses
//!   ([`detect`]);
//! - exact octahedron counting with an independent brute-force oracle and
//!   the explicit octahedron-count lower bound ([`census`]);
//! - the bipartition stability pipeline: peel, tetrahedron anchor, link
//!   multigraph analysis, and partition extraction with failure
//!   certificates ([`stability`]);
//! - exact rational-with-radicals arithmetic for the delta constant ledger
//!   and machine certification of every inequality in the chain
//!   ([`constants`]).

pub mod census;
pub mod constants;
pub mod detect;
pub mod graph;
pub mod hypergraph;
pub mod multigraph;
pub mod parallel;
pub mod random;
pub mod stability;

pub use graph::SimpleGraph;
pub use hypergraph::{ex_fano, Generator, Hypergraph3, VertexSet};
pub use multigraph::Multigraph;
