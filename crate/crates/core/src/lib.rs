//! Exact separation of blossom inequalities for capacitated and
//! uncapacitated b-matching polytopes.
//!
//! The pipeline is: [`maxflow`] computes minimum (s,t)-cuts, [`cut_tree`]
//! builds Gomory–Hu trees over a terminal set, [`odd_cut`] runs the minimum
//! T-cut and blossom-minimization algorithms on those trees, and
//! [`separation`] reduces blossom-inequality separation to them. [`oracle`]
//! holds brute-force references used to validate everything on small inputs.

pub mod cut_tree;
pub mod error;
pub mod graph;
pub mod maxflow;
pub mod odd_cut;
pub mod oracle;
pub mod random;
pub mod separation;
pub mod weight;

pub use cut_tree::{gomory_hu, CutTree, TreeEdge};
pub use error::{Error, Result};
pub use graph::{EdgeId, EdgeSet, Graph, Vertex, VertexSet};
pub use maxflow::{min_st_cut, MinCut};
pub use odd_cut::{
    beta_min_f, blossom_value, minimize_blossom, minimum_t_cut, t_odd_tree_edges, t_prime, BetaMin,
    Blossom, BlossomSearch, OddCutProblem, TCut,
};
pub use separation::{
    blossom_lhs_rhs, build_star_graph, check_degree_and_bounds, separate, separate_capacitated,
    separate_tsp, separate_uncapacitated, slack, BlossomEvaluation, FractionalPoint, Instance,
    LinearViolation, Mode, Outcome, SeparationReport, StarGraph, ViolatedBlossom,
};
pub use weight::{parse_rational, ExtWeight, Weights};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
