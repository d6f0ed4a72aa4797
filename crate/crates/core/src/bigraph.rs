//! Bipartite graphs, bicliques, and the translation between biclique edge
//! covers and mod/resc matrix pairs.
//!
//! Left vertices are the rows of the bi-adjacency matrix (male strains),
//! right vertices its columns (female strains). A cover with `k` bicliques
//! and a pair `(M, R)` with `k` columns describe the same thing: column `l`
//! puts row `i` on the left of biclique `l` iff `M[i][l] = 1`, and column `j`
//! on its right iff `R[j][l] = 0`.

use alloc::format;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::boolmat::{verify_solution, BoolMatrix, ModRescPair};
use crate::error::{mismatch, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// A bipartite graph stored as left-to-right neighbor sets plus their transpose.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    left: Vec<BitSet>,
    right: Vec<BitSet>,
}

impl BipartiteGraph {
    pub fn empty(left_count: usize, right_count: usize) -> Self {
        BipartiteGraph {
            left: (0..left_count).map(|_| BitSet::new(right_count)).collect(),
            right: (0..right_count).map(|_| BitSet::new(left_count)).collect(),
        }
    }

    /// Edge `(i, j)` for every `c[i][j] = 1`.
    pub fn from_biadjacency(c: &BoolMatrix) -> Self {
        BipartiteGraph {
            left: c.row_bits().to_vec(),
            right: c.transpose().row_bits().to_vec(),
        }
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(left_count: usize, right_count: usize, edges: I) -> Self {
        let mut g = Self::empty(left_count, right_count);
        for (a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    pub fn to_biadjacency(&self) -> BoolMatrix {
        BoolMatrix::from_bitset_rows(self.right_count(), self.left.clone())
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        self.left[a].insert(b);
        self.right[b].insert(a);
    }

    #[inline]
    pub fn left_count(&self) -> usize {
        self.left.len()
    }

    #[inline]
    pub fn right_count(&self) -> usize {
        self.right.len()
    }

    pub fn count(&self, side: Side) -> usize {
        match side {
            Side::Left => self.left_count(),
            Side::Right => self.right_count(),
        }
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.left[a].contains(b)
    }

    /// Right neighbors of left vertex `a`.
    #[inline]
    pub fn left_neighbors(&self, a: usize) -> &BitSet {
        &self.left[a]
    }

    /// Left neighbors of right vertex `b`.
    #[inline]
    pub fn right_neighbors(&self, b: usize) -> &BitSet {
        &self.right[b]
    }

    pub fn neighbors(&self, side: Side, v: usize) -> &BitSet {
        match side {
            Side::Left => &self.left[v],
            Side::Right => &self.right[v],
        }
    }

    pub fn edge_count(&self) -> usize {
        self.left.iter().map(BitSet::count).sum()
    }

    /// Edges in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.left
            .iter()
            .enumerate()
            .flat_map(|(a, ns)| ns.iter().map(move |b| (a, b)))
    }

    /// Right vertices adjacent to every member of `left` (all of them if `left` is empty).
    pub fn common_right(&self, left: &BitSet) -> BitSet {
        let mut acc = BitSet::full(self.right_count());
        for a in left {
            acc.intersect_with(&self.left[a]);
        }
        acc
    }

    /// Left vertices adjacent to every member of `right` (all of them if `right` is empty).
    pub fn common_left(&self, right: &BitSet) -> BitSet {
        let mut acc = BitSet::full(self.left_count());
        for b in right {
            acc.intersect_with(&self.right[b]);
        }
        acc
    }

    /// True iff every pair in `left × right` is an edge. Vacuously true if either side is empty.
    pub fn is_biclique(&self, left: &BitSet, right: &BitSet) -> bool {
        left.iter().all(|a| right.is_subset(&self.left[a]))
    }

    /// Every member of the cover is a biclique of `self` and together they cover every edge.
    pub fn covers(&self, cover: &BicliqueCover) -> bool {
        let shapes_ok = cover.bicliques.iter().all(|b| {
            b.left.capacity() == self.left_count() && b.right.capacity() == self.right_count()
        });
        if !shapes_ok || !cover.bicliques.iter().all(|b| self.is_biclique(&b.left, &b.right)) {
            return false;
        }
        let mut covered: Vec<BitSet> = (0..self.left_count()).map(|_| BitSet::new(self.right_count())).collect();
        for b in &cover.bicliques {
            for a in &b.left {
                covered[a].union_with(&b.right);
            }
        }
        covered == self.left
    }
}

/// A vertex-subset pair. Ordered by left set, then right set, lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Biclique {
    pub left: BitSet,
    pub right: BitSet,
}

impl Biclique {
    pub fn new(left: BitSet, right: BitSet) -> Self {
        Biclique { left, right }
    }

    pub fn from_indices(
        left_count: usize,
        right_count: usize,
        left: impl IntoIterator<Item = usize>,
        right: impl IntoIterator<Item = usize>,
    ) -> Self {
        Biclique {
            left: BitSet::from_indices(left_count, left),
            right: BitSet::from_indices(right_count, right),
        }
    }

    pub fn side(&self, side: Side) -> &BitSet {
        match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }

    pub fn side_mut(&mut self, side: Side) -> &mut BitSet {
        match side {
            Side::Left => &mut self.left,
            Side::Right => &mut self.right,
        }
    }

    pub fn has_empty_side(&self) -> bool {
        self.left.is_empty() || self.right.is_empty()
    }

    pub fn contains_edge(&self, a: usize, b: usize) -> bool {
        self.left.contains(a) && self.right.contains(b)
    }

    pub fn edge_count(&self) -> usize {
        self.left.count() * self.right.count()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BicliqueCover {
    pub bicliques: Vec<Biclique>,
}

impl BicliqueCover {
    pub fn new(bicliques: Vec<Biclique>) -> Self {
        BicliqueCover { bicliques }
    }

    pub fn size(&self) -> usize {
        self.bicliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bicliques.is_empty()
    }

    /// Sorts bicliques and removes duplicates.
    pub fn canonicalize(&mut self) {
        self.bicliques.sort();
        self.bicliques.dedup();
    }

    pub fn canonical(mut self) -> Self {
        self.canonicalize();
        self
    }
}

/// Builds `(M, R)` from a cover: `M[i][l] = 1` iff `i ∈ left(B_l)`,
/// `R[j][l] = 0` iff `j ∈ right(B_l)`.
pub fn cover_to_matrices(g: &BipartiteGraph, cover: &BicliqueCover) -> Result<ModRescPair> {
    if !g.covers(cover) {
        return Err(Error::ContractViolation(format!(
            "{} bicliques do not form a biclique edge cover of the {}+{} graph",
            cover.size(),
            g.left_count(),
            g.right_count()
        )));
    }
    let k = cover.size();
    let mut mod_genes = BoolMatrix::zeros(g.left_count(), k);
    let mut resc_genes = BoolMatrix::ones(g.right_count(), k);
    for (l, b) in cover.bicliques.iter().enumerate() {
        for a in &b.left {
            mod_genes.set(a, l, true);
        }
        for j in &b.right {
            resc_genes.set(j, l, false);
        }
    }
    ModRescPair::new(mod_genes, resc_genes)
}

/// Reads a cover off a verified pair: biclique `l` is
/// `({i : M[i][l] = 1}, {j : R[j][l] = 0})`. Columns with an empty side are
/// dropped and the result is put in canonical form.
pub fn matrices_to_cover(g: &BipartiteGraph, pair: &ModRescPair) -> Result<BicliqueCover> {
    let c = g.to_biadjacency();
    if pair.mod_genes.rows() != c.rows() || pair.resc_genes.rows() != c.cols() {
        return Err(mismatch(
            "matrices_to_cover",
            format!("{}x_ and {}x_", c.rows(), c.cols()),
            format!("{}x_ and {}x_", pair.mod_genes.rows(), pair.resc_genes.rows()),
        ));
    }
    if !verify_solution(&c, pair)? {
        return Err(Error::ContractViolation("M ⊗ R does not reproduce the bi-adjacency matrix".into()));
    }
    let mod_t = pair.mod_genes.transpose();
    let resc_t = pair.resc_genes.transpose();
    let bicliques = (0..pair.gene_count())
        .map(|l| Biclique::new(mod_t.row(l).clone(), resc_t.row(l).complement()))
        .filter(|b| !b.has_empty_side())
        .collect();
    Ok(BicliqueCover::new(bicliques).canonical())
}
