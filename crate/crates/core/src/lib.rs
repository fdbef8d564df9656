//! Dominating sets of disk graphs whose centers are in convex position.
//!
//! [`weighted_dp::solve_weighted`] finds a minimum-weight dominating set of
//! at most `k` disks; [`unweighted_greedy::solve_unweighted`] finds a
//! smallest one. [`oracle`] holds exhaustive reference solvers and
//! diagnostics, [`io`] the file formats and generators.

pub mod cli;
pub mod geometry;
pub mod io;
pub mod neighbor_index;
pub mod oracle;
pub mod solution;
pub mod sublist_queries;
pub mod unweighted_greedy;
pub mod weighted_dp;

pub use geometry::{CyclicSublist, Instance, Mode, WeightedDisk};
pub use solution::{Solution, SolveError};
pub use unweighted_greedy::solve_unweighted;
pub use weighted_dp::{solve_weighted, solve_weighted_unbounded, SolverConfig};
