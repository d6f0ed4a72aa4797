//! Minimum biclique edge cover and the mod/resc solver built on it.

mod planted;
mod search;

pub use planted::generate_planted;
pub use search::{
    fooling_set, greedy_upper_bound, solve_branch, solve_branch_counted, solve_partition, solve_partition_counted,
    solve_subsets, solve_subsets_counted, SearchStats,
};

use crate::bigraph::{cover_to_matrices, BicliqueCover, BipartiteGraph};
use crate::boolmat::{verify_solution, BoolMatrix, ModRescPair};
use crate::error::{Error, Result};
use crate::kernel::{kernelize, within_size_bound, KernelResult};
use search::{branch_on, greedy_cover, subsets_on, EdgeIndex};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Algorithm {
    /// Edge partitions into at most `k` blocks.
    Partition,
    /// Subsets of maximal bicliques.
    Subsets,
    /// Branching over maximal bicliques on the least-covered edge.
    #[default]
    Branch,
}

/// How candidate values of `k` between the bounds are visited.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Lower bound upward until the first feasible `k`.
    Incremental,
    /// Binary search between the lower bound and the greedy cover size.
    #[default]
    Dichotomy,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    pub algorithm: Algorithm,
    pub strategy: Strategy,
    pub max_k: Option<usize>,
    /// Reduce the graph before searching.
    pub kernelize: bool,
    /// The search is sequential, so results are always reproducible; the
    /// flag is carried for front ends that also report timings.
    pub deterministic: bool,
    pub seed: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            algorithm: Algorithm::Branch,
            strategy: Strategy::Dichotomy,
            max_k: None,
            kernelize: true,
            deterministic: true,
            seed: 0,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub nodes: u64,
    pub partitions_tested: u64,
    pub kernel_offset: usize,
    pub kernel_left: usize,
    pub kernel_right: usize,
    /// Fooling-set bound, in terms of the input graph.
    pub lower_bound: usize,
    /// Greedy cover size, in terms of the input graph.
    pub upper_bound: usize,
    /// Number of `k` values handed to the exact procedure.
    pub decisions: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverSolution {
    pub k: usize,
    pub cover: BicliqueCover,
    pub pair: ModRescPair,
    pub stats: SolveStats,
}

struct Decider<'a> {
    graph: &'a BipartiteGraph,
    index: EdgeIndex,
    algorithm: Algorithm,
    /// The size bound only holds on reduced (twin-free) graphs.
    reduced: bool,
    stats: SearchStats,
    decisions: u32,
}

impl Decider<'_> {
    fn decide(&mut self, k: usize) -> Option<BicliqueCover> {
        self.decisions += 1;
        if self.reduced && !within_size_bound(self.graph, 0, k) {
            return None;
        }
        match self.algorithm {
            Algorithm::Partition => solve_partition_counted(self.graph, k, &mut self.stats),
            Algorithm::Subsets => subsets_on(&self.index, k, &mut self.stats),
            Algorithm::Branch => branch_on(&self.index, k, &mut self.stats),
        }
    }
}

/// Minimum biclique edge cover of `g`.
///
/// Kernelizes once, brackets the optimum between a fooling-set bound and a
/// greedy cover, searches that range with the configured procedure, and lifts
/// the result back to `g`.
pub fn min_cover(g: &BipartiteGraph, config: &SolverConfig) -> Result<CoverSolution> {
    let reduced: Option<KernelResult> = config.kernelize.then(|| kernelize(g, None));
    let (work, offset) = match &reduced {
        Some(kr) => (&kr.kernel, kr.parameter_offset),
        None => (g, 0),
    };

    let mut decider = Decider {
        graph: work,
        index: EdgeIndex::new(work),
        algorithm: config.algorithm,
        reduced: reduced.is_some(),
        stats: SearchStats::default(),
        decisions: 0,
    };
    let lower = fooling_set(work).len();
    let greedy = greedy_cover(&decider.index);
    let upper = greedy.size();
    let infeasible = |max_k| Error::InfeasibleWithinBudget {
        max_k,
        lower_bound: lower + offset,
    };

    // Largest kernel cover size the budget allows.
    let cap = match config.max_k {
        Some(max_k) => match max_k.checked_sub(offset) {
            Some(c) if c >= lower => c,
            _ => return Err(infeasible(max_k)),
        },
        None => usize::MAX,
    };

    let best = match config.strategy {
        Strategy::Incremental => {
            let mut found = None;
            for k in lower..upper.min(cap.saturating_add(1)) {
                if let Some(c) = decider.decide(k) {
                    found = Some(c);
                    break;
                }
            }
            match found {
                Some(c) => c,
                None if upper <= cap => greedy,
                None => return Err(infeasible(config.max_k.unwrap_or(usize::MAX))),
            }
        }
        Strategy::Dichotomy => {
            let mut best = greedy;
            if best.size() > cap {
                best = decider
                    .decide(cap)
                    .ok_or_else(|| infeasible(config.max_k.unwrap_or(usize::MAX)))?;
            }
            let (mut lo, mut hi) = (lower, best.size());
            while lo < hi {
                let mid = lo + (hi - lo) / 2;
                match decider.decide(mid) {
                    Some(c) => {
                        hi = c.size();
                        best = c;
                    }
                    None => lo = mid + 1,
                }
            }
            best
        }
    };

    let cover = match &reduced {
        Some(kr) => kr.lift(&best)?,
        None => best,
    }
    .canonical();
    let k = cover.size();
    if let Some(max_k) = config.max_k {
        if k > max_k {
            return Err(infeasible(max_k));
        }
    }
    let pair = cover_to_matrices(g, &cover)?;
    if !verify_solution(&g.to_biadjacency(), &pair)? {
        return Err(Error::ContractViolation("solver produced matrices that do not reproduce C".into()));
    }
    let stats = SolveStats {
        nodes: decider.stats.nodes,
        partitions_tested: decider.stats.partitions_tested,
        kernel_offset: offset,
        kernel_left: work.left_count(),
        kernel_right: work.right_count(),
        lower_bound: lower + offset,
        upper_bound: upper + offset,
        decisions: decider.decisions,
    };
    Ok(CoverSolution { k, cover, pair, stats })
}

/// Fewest mod/resc gene pairs explaining `c`.
pub fn solve_modresc(c: &BoolMatrix, config: &SolverConfig) -> Result<CoverSolution> {
    min_cover(&BipartiteGraph::from_biadjacency(c), config)
}
