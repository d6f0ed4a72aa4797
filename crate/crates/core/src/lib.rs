//! Exact solver for mod/resc parsimony inference.
//!
//! Given a 0/1 compatibility matrix `C` (rows: male strains, columns: female
//! strains), find mod and resc matrices `M`, `R` with the fewest columns such
//! that `C = M ⊗ R`. This is the minimum biclique edge cover of the bipartite
//! graph whose bi-adjacency matrix is `C`, which the crate solves with
//! kernelization followed by exact search over maximal bicliques.
//!
//! The crate is `no_std` and only needs `alloc`.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bigraph;
pub mod bitset;
pub mod boolmat;
pub mod bridge;
pub mod enumerate;
mod error;
pub mod kernel;
pub mod solve;

pub use bigraph::{cover_to_matrices, matrices_to_cover, Biclique, BicliqueCover, BipartiteGraph, Side};
pub use bitset::BitSet;
pub use boolmat::{mat_otimes, trivial_solution, vec_otimes, verify_solution, BoolMatrix, ModRescPair};
pub use bridge::{biclique_to_clique_cover, clique_to_biclique_cover, saturate, CliqueCover, GeneralGraph};
pub use enumerate::{count_bound_check, maximal_bicliques};
pub use error::{Error, Result};
pub use kernel::{kernelize, KernelResult, ReductionEvent, Verdict};
pub use solve::{
    generate_planted, min_cover, solve_branch, solve_modresc, solve_partition, solve_subsets, Algorithm, CoverSolution,
    SolveStats, SolverConfig, Strategy,
};
