//! Radio labelings of graphs: constructions, verification, lower bounds,
//! and exact search.
//!
//! A radio labeling of a connected graph `G` assigns distinct positive
//! integers to vertices so that `d(u, v) + |c(u) - c(v)| >= diam(G) + 1`
//! for every vertex pair; the radio number `rn(G)` is the smallest
//! achievable span (largest label). This crate provides:
//!
//! * [`graph`]: immutable graphs with role-tagged vertices, cached
//!   all-pairs distances, JSON and DOT export;
//! * [`families`]: generators for complete, star, complete bipartite,
//!   wheel and gear graphs, plus their closed-form radio numbers;
//! * [`radio`]: the labeling model and the exhaustive radio-condition
//!   verifier;
//! * [`constructive`]: O(n) labelers realizing each closed form,
//!   including the position-function construction for gears;
//! * [`bounds`]: vertex-count and eccentricity-gap lower bounds, and the
//!   forbidden-value count that is tight for gears;
//! * [`solver`]: exact branch-and-bound search with forbidden-interval
//!   pruning, used to confirm every closed form independently.
//!
//! The `radiolabel` binary exposes all of this on the command line.

pub mod bounds;
pub mod constructive;
pub mod families;
pub mod graph;
pub mod radio;
pub mod solver;

pub use bounds::{lower_bound_ecc_gap, lower_bound_gear, lower_bound_trivial, BoundReport};
pub use constructive::{
    gear_positions, label_complete, label_complete_bipartite, label_gear, label_star, label_wheel,
};
pub use families::FamilySpec;
pub use graph::{Graph, Role, VertexId};
pub use radio::{check, Labeling, Violation};
pub use solver::{feasible_at_span, solve, SolveOutcome, SolverConfig};
