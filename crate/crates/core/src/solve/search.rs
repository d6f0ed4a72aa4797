//! Exact decision procedures: "does `g` have a biclique edge cover with at
//! most `k` bicliques?"

use alloc::vec::Vec;

use itertools::Itertools;

use crate::bigraph::{Biclique, BicliqueCover, BipartiteGraph};
use crate::bitset::BitSet;
use crate::enumerate::maximal_bicliques;

/// Work counters shared by all procedures.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Search-tree nodes (partition, branch) or candidate subsets (subsets).
    pub nodes: u64,
    /// Block-closure tests in the partition search.
    pub partitions_tested: u64,
}

impl SearchStats {
    pub fn absorb(&mut self, other: SearchStats) {
        self.nodes += other.nodes;
        self.partitions_tested += other.partitions_tested;
    }
}

/// Maximal bicliques with their edge sets indexed against a fixed edge order.
pub(crate) struct EdgeIndex {
    pub edges: Vec<(usize, usize)>,
    pub bicliques: Vec<Biclique>,
    pub masks: Vec<BitSet>,
}

impl EdgeIndex {
    pub fn new(g: &BipartiteGraph) -> Self {
        let edges: Vec<(usize, usize)> = g.edges().collect();
        let bicliques = maximal_bicliques(g);
        let masks = bicliques
            .iter()
            .map(|b| BitSet::from_indices(edges.len(), edges.iter().enumerate().filter(|(_, &(a, c))| b.contains_edge(a, c)).map(|(i, _)| i)))
            .collect();
        EdgeIndex { edges, bicliques, masks }
    }

    fn cover_of(&self, ids: &[usize]) -> BicliqueCover {
        BicliqueCover::new(ids.iter().map(|&i| self.bicliques[i].clone()).collect()).canonical()
    }
}

/// Assigns edges to at most `k` blocks (restricted-growth order) and accepts
/// when every block's touched vertex sets `(U_i, W_i)` span a biclique.
pub fn solve_partition(g: &BipartiteGraph, k: usize) -> Option<BicliqueCover> {
    solve_partition_counted(g, k, &mut SearchStats::default())
}

pub fn solve_partition_counted(g: &BipartiteGraph, k: usize, stats: &mut SearchStats) -> Option<BicliqueCover> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut blocks: Vec<Biclique> = Vec::with_capacity(k);
    if assign(g, &edges, 0, k, &mut blocks, stats) {
        Some(BicliqueCover::new(blocks).canonical())
    } else {
        None
    }
}

fn assign(
    g: &BipartiteGraph,
    edges: &[(usize, usize)],
    idx: usize,
    k: usize,
    blocks: &mut Vec<Biclique>,
    stats: &mut SearchStats,
) -> bool {
    stats.nodes += 1;
    let Some(&(a, b)) = edges.get(idx) else {
        return true;
    };
    for i in 0..blocks.len() {
        stats.partitions_tested += 1;
        let block = &blocks[i];
        // Adding (a, b) keeps U × W inside E iff a sees all of W and b sees all of U.
        if !block.right.is_subset(g.left_neighbors(a)) || !block.left.is_subset(g.right_neighbors(b)) {
            continue;
        }
        let (had_a, had_b) = (block.left.contains(a), block.right.contains(b));
        blocks[i].left.insert(a);
        blocks[i].right.insert(b);
        if assign(g, edges, idx + 1, k, blocks, stats) {
            return true;
        }
        if !had_a {
            blocks[i].left.remove(a);
        }
        if !had_b {
            blocks[i].right.remove(b);
        }
    }
    if blocks.len() < k {
        blocks.push(Biclique::from_indices(g.left_count(), g.right_count(), [a], [b]));
        if assign(g, edges, idx + 1, k, blocks, stats) {
            return true;
        }
        blocks.pop();
    }
    false
}

/// Tries every subset of at most `k` maximal bicliques, smallest first.
pub fn solve_subsets(g: &BipartiteGraph, k: usize) -> Option<BicliqueCover> {
    solve_subsets_counted(g, k, &mut SearchStats::default())
}

pub fn solve_subsets_counted(g: &BipartiteGraph, k: usize, stats: &mut SearchStats) -> Option<BicliqueCover> {
    subsets_on(&EdgeIndex::new(g), k, stats)
}

pub(crate) fn subsets_on(index: &EdgeIndex, k: usize, stats: &mut SearchStats) -> Option<BicliqueCover> {
    let all = BitSet::full(index.edges.len());
    for size in 0..=k.min(index.bicliques.len()) {
        for combo in (0..index.bicliques.len()).combinations(size) {
            stats.nodes += 1;
            let mut covered = BitSet::new(index.edges.len());
            for &i in &combo {
                covered.union_with(&index.masks[i]);
            }
            if covered == all {
                return Some(index.cover_of(&combo));
            }
        }
    }
    None
}

/// Depth-first branching over maximal bicliques: take the uncovered edge
/// contained in the fewest maximal bicliques and try each of them.
pub fn solve_branch(g: &BipartiteGraph, k: usize) -> Option<BicliqueCover> {
    solve_branch_counted(g, k, &mut SearchStats::default())
}

pub fn solve_branch_counted(g: &BipartiteGraph, k: usize, stats: &mut SearchStats) -> Option<BicliqueCover> {
    branch_on(&EdgeIndex::new(g), k, stats)
}

pub(crate) fn branch_on(index: &EdgeIndex, k: usize, stats: &mut SearchStats) -> Option<BicliqueCover> {
    let mut containing: Vec<Vec<usize>> = (0..index.edges.len()).map(|_| Vec::new()).collect();
    for (i, mask) in index.masks.iter().enumerate() {
        for e in mask {
            containing[e].push(i);
        }
    }
    let mut chosen = Vec::with_capacity(k);
    let uncovered = BitSet::full(index.edges.len());
    if branch(index, &containing, uncovered, k, &mut chosen, stats) {
        Some(index.cover_of(&chosen))
    } else {
        None
    }
}

fn branch(
    index: &EdgeIndex,
    containing: &[Vec<usize>],
    uncovered: BitSet,
    budget: usize,
    chosen: &mut Vec<usize>,
    stats: &mut SearchStats,
) -> bool {
    stats.nodes += 1;
    let remaining = uncovered.count();
    if remaining == 0 {
        return true;
    }
    if budget == 0 {
        return false;
    }
    let best_gain = index
        .masks
        .iter()
        .map(|m| m.intersection(&uncovered).count())
        .max()
        .unwrap_or(0);
    if best_gain * budget < remaining {
        return false;
    }
    let pivot = uncovered
        .iter()
        .min_by_key(|&e| (containing[e].len(), e))
        .expect("uncovered is nonempty");
    for &id in &containing[pivot] {
        let mut next = uncovered.clone();
        next.difference_with(&index.masks[id]);
        chosen.push(id);
        if branch(index, containing, next, budget - 1, chosen, stats) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Repeatedly takes the maximal biclique covering the most uncovered edges
/// (lowest index on ties).
pub(crate) fn greedy_cover(index: &EdgeIndex) -> BicliqueCover {
    let mut uncovered = BitSet::full(index.edges.len());
    let mut chosen = Vec::new();
    while !uncovered.is_empty() {
        let (id, _) = index
            .masks
            .iter()
            .enumerate()
            .map(|(i, m)| (i, m.intersection(&uncovered).count()))
            .fold((usize::MAX, 0), |best, cur| if cur.1 > best.1 { cur } else { best });
        uncovered.difference_with(&index.masks[id]);
        chosen.push(id);
    }
    index.cover_of(&chosen)
}

/// Greedy fooling set: edges no two of which fit in a common biclique.
/// Its size is a lower bound on the cover number.
pub fn fooling_set(g: &BipartiteGraph) -> Vec<(usize, usize)> {
    let mut set: Vec<(usize, usize)> = Vec::new();
    for (a, b) in g.edges() {
        if set.iter().all(|&(c, d)| !(g.has_edge(a, d) && g.has_edge(c, b))) {
            set.push((a, b));
        }
    }
    set
}

/// Greedy cover of `g` built from its maximal bicliques.
pub fn greedy_upper_bound(g: &BipartiteGraph) -> BicliqueCover {
    greedy_cover(&EdgeIndex::new(g))
}
