//! Exact paired domination on small graphs.
//!
//! The crate computes the paired domination number `γ_pr`, enumerates all
//! minimum paired dominating sets, picks canonical ones (minimum number of
//! induced edges, then fewest `A ∪ B` vertices), and checks the discharging
//! weight argument behind the `γ_pr(G) <= 4n/7` bound for connected cubic
//! graphs other than the Petersen graph.

pub mod canonical;
pub mod corpus;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod named;
pub mod pds;
pub mod solver;
pub mod weight;

pub use canonical::{canonical_pds, CanonicalChoice};
pub use graph::{Graph, GraphError, VertexSet};
pub use graph6::{parse_graph6, write_graph6, Graph6Error};
pub use named::{named_graph, petersen};
pub use pds::{Label, Matching, PairedDomSet, Partition, Violation};
pub use solver::{gamma_pr, GammaPr, SolveError};
pub use weight::{certify_bound, Certificate, Weight};
