//! Brute-force reference answers for small instances.
//!
//! Everything here works directly from the definitions on graphs given as
//! bitmasks (`rows[i]` = right neighbors of left vertex `i`) and shares no
//! code with the solver, so it can be used to check it.

/// Bitmask graph: `rows[i]` has bit `j` set iff left `i` is adjacent to right `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaskGraph {
    pub n: usize,
    pub m: usize,
    pub rows: Vec<u32>,
}

impl MaskGraph {
    pub fn new(n: usize, m: usize, rows: Vec<u32>) -> Self {
        assert!(n <= 16 && m <= 16 && rows.len() == n);
        assert!(rows.iter().all(|&r| r >> m == 0));
        MaskGraph { n, m, rows }
    }

    /// Graph number `code` among all `2^(n*m)` graphs on `n + m` vertices (row-major bits).
    pub fn from_code(n: usize, m: usize, code: u64) -> Self {
        let rows = (0..n).map(|i| ((code >> (i * m)) & ((1u64 << m) - 1)) as u32).collect();
        MaskGraph::new(n, m, rows)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.rows[a] >> b & 1 == 1
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in 0..self.m {
                if self.has_edge(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn is_biclique(&self, left: u32, right: u32) -> bool {
        (0..self.n).all(|a| left >> a & 1 == 0 || self.rows[a] & right == right)
    }
}

/// Every `(L, R)` with both sides nonempty and `L × R ⊆ E`.
pub fn all_bicliques(g: &MaskGraph) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for left in 1u32..1 << g.n {
        for right in 1u32..1 << g.m {
            if g.is_biclique(left, right) {
                out.push((left, right));
            }
        }
    }
    out
}

/// Bicliques to which no single vertex can be added.
pub fn maximal_bicliques(g: &MaskGraph) -> Vec<(u32, u32)> {
    all_bicliques(g)
        .into_iter()
        .filter(|&(l, r)| {
            let grow_left = (0..g.n).any(|a| l >> a & 1 == 0 && g.is_biclique(l | 1 << a, r));
            let grow_right = (0..g.m).any(|b| r >> b & 1 == 0 && g.is_biclique(l, r | 1 << b));
            !grow_left && !grow_right
        })
        .collect()
}

fn smallest_covering_subset(universe: &[(usize, usize)], candidates: &[(u32, u32)]) -> usize {
    let masks: Vec<u64> = candidates
        .iter()
        .map(|&(l, r)| {
            universe
                .iter()
                .enumerate()
                .filter(|&(_, &(a, b))| l >> a & 1 == 1 && r >> b & 1 == 1)
                .fold(0u64, |acc, (i, _)| acc | 1 << i)
        })
        .collect();
    let full = if universe.is_empty() { 0 } else { u64::MAX >> (64 - universe.len()) };
    for size in 0..=candidates.len() {
        if exists_cover(&masks, full, size, 0, 0) {
            return size;
        }
    }
    panic!("candidates do not cover the universe");
}

fn exists_cover(masks: &[u64], full: u64, left: usize, start: usize, acc: u64) -> bool {
    if acc == full {
        return true;
    }
    if left == 0 {
        return false;
    }
    (start..masks.len()).any(|i| exists_cover(masks, full, left - 1, i + 1, acc | masks[i]))
}

/// Minimum biclique edge cover, choosing among all bicliques. Use for `n + m <= 6`.
pub fn min_cover_all_bicliques(g: &MaskGraph) -> usize {
    assert!(g.n + g.m <= 6, "too large for the all-bicliques oracle");
    smallest_covering_subset(&g.edges(), &all_bicliques(g))
}

/// Minimum biclique edge cover, choosing among brute-force maximal bicliques.
pub fn min_cover(g: &MaskGraph) -> usize {
    smallest_covering_subset(&g.edges(), &maximal_bicliques(g))
}

/// `u ⊗ v` on bit vectors: some bit set in `u` but not in `v`.
pub fn otimes(u: u32, v: u32) -> bool {
    u & !v != 0
}

/// Smallest `k` admitting `M` (n×k), `R` (m×k) with `M ⊗ R = C`, by exhaustive
/// search over `M` and, for each column of `C`, over all rows of `R`.
pub fn min_k_matrices(c: &MaskGraph) -> usize {
    for k in 0..=c.n.min(c.m) {
        if matrices_exist(c, k) {
            return k;
        }
    }
    unreachable!("identity construction always works at k = n")
}

fn matrices_exist(c: &MaskGraph, k: usize) -> bool {
    let rows_per_m = 1u32 << k;
    let total = 1u64 << (c.n * k);
    (0..total).any(|code| {
        let m_rows: Vec<u32> = (0..c.n).map(|i| ((code >> (i * k)) as u32) & (rows_per_m - 1)).collect();
        (0..c.m).all(|j| {
            (0..rows_per_m).any(|r| (0..c.n).all(|i| otimes(m_rows[i], r) == c.has_edge(i, j)))
        })
    })
}

/// Undirected graph on at most 16 vertices as adjacency masks.
#[derive(Clone, Debug)]
pub struct MaskSimpleGraph {
    pub adj: Vec<u32>,
}

impl MaskSimpleGraph {
    /// Bipartite `g` plus all pairs inside each class; left `i` -> `i`, right `j` -> `n + j`.
    pub fn saturate(g: &MaskGraph) -> Self {
        let v = g.n + g.m;
        let mut adj = vec![0u32; v];
        let mut add = |x: usize, y: usize| {
            adj[x] |= 1 << y;
            adj[y] |= 1 << x;
        };
        for (a, b) in g.edges() {
            add(a, g.n + b);
        }
        for x in 0..v {
            for y in x + 1..v {
                if (x < g.n) == (y < g.n) {
                    add(x, y);
                }
            }
        }
        MaskSimpleGraph { adj }
    }

    pub fn is_clique(&self, set: u32) -> bool {
        (0..self.adj.len()).all(|x| set >> x & 1 == 0 || (set & !(1 << x)) & !self.adj[x] == 0)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.adj.len() {
            for y in x + 1..self.adj.len() {
                if self.adj[x] >> y & 1 == 1 {
                    out.push((x, y));
                }
            }
        }
        out
    }
}

/// Minimum number of cliques whose edges cover every edge, over all maximal cliques.
pub fn min_clique_cover(g: &MaskSimpleGraph) -> usize {
    let v = g.adj.len();
    let cliques: Vec<u32> = (1u32..1 << v).filter(|&s| s.count_ones() >= 2 && g.is_clique(s)).collect();
    let maximal: Vec<u32> = cliques
        .iter()
        .copied()
        .filter(|&s| !cliques.iter().any(|&t| t != s && t & s == s))
        .collect();
    let edges = g.edges();
    let masks: Vec<u64> = maximal
        .iter()
        .map(|&s| {
            edges
                .iter()
                .enumerate()
                .filter(|&(_, &(x, y))| s >> x & 1 == 1 && s >> y & 1 == 1)
                .fold(0u64, |acc, (i, _)| acc | 1 << i)
        })
        .collect();
    let full = if edges.is_empty() { 0 } else { u64::MAX >> (64 - edges.len()) };
    (0..=masks.len()).find(|&size| exists_cover(&masks, full, size, 0, 0)).expect("maximal cliques cover all edges")
}

/// True iff some vertex is adjacent to every vertex of the opposite class.
pub fn has_full_degree_vertex(g: &MaskGraph) -> bool {
    let all_right = (1u32 << g.m) - 1;
    let left_full = g.m > 0 && g.rows.contains(&all_right);
    let right_full = g.n > 0 && (0..g.m).any(|b| (0..g.n).all(|a| g.has_edge(a, b)));
    left_full || right_full
}
