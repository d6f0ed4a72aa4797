//! Translation between biclique edge covers of a bipartite graph and clique
//! edge covers of its saturation (both vertex classes turned into cliques).
//!
//! Vertex numbering in the saturated graph: left vertex `i` becomes `i`,
//! right vertex `j` becomes `n + j`.

use alloc::format;
use alloc::vec::Vec;

use crate::bigraph::{Biclique, BicliqueCover, BipartiteGraph, Side};
use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Simple undirected graph with an optional two-class labeling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralGraph {
    adj: Vec<BitSet>,
    classes: Option<Vec<Side>>,
}

impl GeneralGraph {
    pub fn new(vertex_count: usize) -> Self {
        GeneralGraph {
            adj: (0..vertex_count).map(|_| BitSet::new(vertex_count)).collect(),
            classes: None,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    /// Panics on self-loops.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "self-loop at {u}");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    pub fn class(&self, v: usize) -> Option<Side> {
        self.classes.as_ref().map(|c| c[v])
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitSet::count).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn is_clique(&self, set: &BitSet) -> bool {
        set.iter().all(|v| {
            let mut others = set.clone();
            others.remove(v);
            others.is_subset(&self.adj[v])
        })
    }

    pub fn covers(&self, cover: &CliqueCover) -> bool {
        if !cover.cliques.iter().all(|c| c.capacity() == self.vertex_count() && self.is_clique(c)) {
            return false;
        }
        let mut covered: Vec<BitSet> = (0..self.vertex_count()).map(|_| BitSet::new(self.vertex_count())).collect();
        for c in &cover.cliques {
            for v in c {
                covered[v].union_with(c);
                covered[v].remove(v);
            }
        }
        covered == self.adj
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CliqueCover {
    pub cliques: Vec<BitSet>,
}

impl CliqueCover {
    pub fn size(&self) -> usize {
        self.cliques.len()
    }
}

/// Adds every intra-class pair to the cross edges of `g`.
pub fn saturate(g: &BipartiteGraph) -> GeneralGraph {
    let (n, m) = (g.left_count(), g.right_count());
    let mut out = GeneralGraph::new(n + m);
    for (a, b) in g.edges() {
        out.add_edge(a, n + b);
    }
    for (lo, hi) in [(0, n), (n, n + m)] {
        for u in lo..hi {
            for v in u + 1..hi {
                out.add_edge(u, v);
            }
        }
    }
    out.classes = Some((0..n).map(|_| Side::Left).chain((0..m).map(|_| Side::Right)).collect());
    out
}

fn class_set(n: usize, m: usize, side: Side) -> BitSet {
    match side {
        Side::Left => BitSet::from_indices(n + m, 0..n),
        Side::Right => BitSet::from_indices(n + m, n..n + m),
    }
}

/// `{V(B_1), ..., V(B_k), V_1, V_2}`: `k + 2` cliques covering the saturation.
pub fn biclique_to_clique_cover(cover: &BicliqueCover, g: &BipartiteGraph) -> Result<CliqueCover> {
    if !g.covers(cover) {
        return Err(Error::ContractViolation("biclique_to_clique_cover: input is not a biclique edge cover".into()));
    }
    let (n, m) = (g.left_count(), g.right_count());
    let mut cliques: Vec<BitSet> = cover
        .bicliques
        .iter()
        .map(|b| BitSet::from_indices(n + m, b.left.iter().chain(b.right.iter().map(|j| n + j))))
        .collect();
    cliques.push(class_set(n, m, Side::Left));
    cliques.push(class_set(n, m, Side::Right));
    Ok(CliqueCover { cliques })
}

/// Splits every clique that meets both classes into (left members, right
/// members); one-sided cliques are dropped. The result is canonical.
///
/// `g` must have no vertex adjacent to the whole opposite class. When the
/// clique cover contains both class cliques the result has at most
/// `cliques.size() - 2` bicliques.
pub fn clique_to_biclique_cover(cliques: &CliqueCover, g: &BipartiteGraph) -> Result<BicliqueCover> {
    for side in [Side::Left, Side::Right] {
        let opposite = g.count(side.opposite());
        if let Some(v) = (0..g.count(side)).find(|&v| opposite > 0 && g.neighbors(side, v).count() == opposite) {
            return Err(Error::ContractViolation(format!(
                "{side:?} vertex {v} is adjacent to every vertex of the opposite class; reduce it first"
            )));
        }
    }
    let saturated = saturate(g);
    if !saturated.covers(cliques) {
        return Err(Error::ContractViolation("clique_to_biclique_cover: input is not a clique edge cover".into()));
    }
    let n = g.left_count();
    let bicliques = cliques
        .cliques
        .iter()
        .map(|c| {
            Biclique::new(
                BitSet::from_indices(n, c.iter().filter(|&v| v < n)),
                BitSet::from_indices(g.right_count(), c.iter().filter(|&v| v >= n).map(|v| v - n)),
            )
        })
        .filter(|b| !b.has_empty_side())
        .collect();
    Ok(BicliqueCover::new(bicliques).canonical())
}
