//! 1-skeletons of cut polytopes.
//!
//! The cut polytope of a connected graph G is the convex hull of the
//! incidence vectors of its 2^(|V|−1) cuts; its 1-skeleton connects two cuts
//! exactly when deleting δ(X△Y) from G leaves two components. This crate
//! builds that skeleton, decides and certifies adjacency, computes diameter
//! and clique number exactly at desk scale, and carries the constructive
//! bounds known for structured classes: trees, cacti, almost trees, cycles,
//! complete and complete multipartite graphs.
//!
//! Modules:
//! - [`graph`]: graphs, canonical cuts, cut vectors, classification.
//! - [`skeleton`]: adjacency tests, certificates, witnesses, skeleton
//!   construction, subgraph inheritance checks.
//! - [`analysis`]: diameter, clique number, coloring and clique verification.
//! - [`constructions`]: binary representation matrices, BRM and BRM*
//!   colorings, Hamming-ball and symmetric-cut cliques, per-class bounds.
//! - [`workbench`]: seeded generators, exhaustive max-cut, verdict reports.
//!
//! Runnable walkthroughs live in `examples/`: `cut_polytope_of_k3`,
//! `tree_skeletons_are_hypercubes`, `adjacency_certificates`,
//! `coloring_upper_bounds`, `clique_constructions`, `brute_force_maxcut`
//! and `class_summary_report`.

pub mod analysis;
pub mod constructions;
pub mod graph;
pub mod skeleton;
pub mod workbench;

pub use analysis::{clique_number, diameter, metrics, verify_clique, verify_coloring, Metrics};
pub use constructions::{
    bounds_for, brm, brm_coloring, brm_star, brm_star_coloring, hamming_ball_clique,
    symmetric_cut_clique, BoundsRow, CliqueFamily,
};
pub use graph::{ClassTag, Cut, CutVector, Graph, GraphClass, GraphError};
pub use skeleton::{
    build_skeleton, certify_adjacent, check_inheritance, is_adjacent, witness_nonadjacent,
    SkeletonGraph,
};
pub use workbench::{generate, maxcut_bruteforce, report, GeneratorSpec, ReportOptions};
