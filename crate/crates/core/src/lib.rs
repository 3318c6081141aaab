//! Exact domination, total domination and semitotal domination for small
//! graphs: minimum sets, counts by size, vertex-removal stability, and a
//! harness that checks published formulas against exhaustive computation.
//!
//! Graphs hold at most 64 vertices, one adjacency word per vertex.

pub mod canon;
pub mod corpus;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod polynomial;
pub mod products;
pub mod solvers;
pub mod stability;
pub mod subsets;
pub mod theorems;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use polynomial::CountPolynomial;
pub use solvers::{
    brute_force_number, count_by_size, domination_number, minimum_set, Conventions, DominationVariant, WitnessRule,
};
pub use stability::{semitotal_stability, stability_witness, RemovalPolicy};
