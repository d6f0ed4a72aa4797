//! Inclusion-wise maximal bicliques.
//!
//! A biclique `(L, R)` with both sides nonempty is maximal exactly when it is
//! closed: `R` is the common neighborhood of `L` and `L` that of `R`. Closed
//! right sides are the nonempty intersections of left neighborhoods, so they
//! are built by intersecting each new neighborhood with every closed set
//! found so far. These are the maximal cliques of the saturated graph that
//! meet both classes, found without materializing it.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::bigraph::{Biclique, BipartiteGraph};
use crate::bitset::BitSet;

/// All maximal bicliques of `g`, in canonical (sorted) order.
pub fn maximal_bicliques(g: &BipartiteGraph) -> Vec<Biclique> {
    let mut closed: BTreeSet<BitSet> = BTreeSet::new();
    for a in 0..g.left_count() {
        let ns = g.left_neighbors(a);
        if ns.is_empty() || closed.contains(ns) {
            continue;
        }
        let fresh: Vec<BitSet> = closed
            .iter()
            .map(|r| r.intersection(ns))
            .filter(|r| !r.is_empty())
            .collect();
        closed.insert(ns.clone());
        closed.extend(fresh);
    }
    let mut out: Vec<Biclique> = closed
        .into_iter()
        .map(|right| Biclique::new(g.common_left(&right), right))
        .collect();
    out.sort();
    out
}

/// `|maximal_bicliques(g)| <= 2^ceil((n + m) / 2)`.
pub fn count_bound_check(g: &BipartiteGraph) -> bool {
    let half = (g.left_count() + g.right_count()).div_ceil(2);
    let count = maximal_bicliques(g).len();
    match 1usize.checked_shl(half as u32).filter(|_| half < usize::BITS as usize) {
        Some(bound) => count <= bound,
        None => true,
    }
}
