//! Kernelization for biclique edge cover.
//!
//! Four rules are applied in priority order, rescanning from the first after
//! every application, until none fires:
//!
//! 1. drop a vertex with no neighbors;
//! 2. drop one of two same-side vertices with identical neighborhoods;
//! 3. drop a degree-1 vertex together with its neighbor (costs one biclique);
//! 4. drop a vertex adjacent to every vertex of the opposite side.
//!
//! Every removal is logged so a cover of the kernel can be lifted back to a
//! cover of the input graph.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::bigraph::{Biclique, BicliqueCover, BipartiteGraph, Side};
use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// One kernelization step. Vertex ids refer to the input graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReductionEvent {
    IsolatedRemoval {
        side: Side,
        vertex: usize,
    },
    TwinMerge {
        side: Side,
        removed: usize,
        kept: usize,
    },
    /// `pendant` (on `side`) had `hub` as its only neighbor; both were removed.
    /// `hub_neighbors` is the hub's neighborhood at removal time and includes `pendant`.
    PendantRemoval {
        side: Side,
        pendant: usize,
        hub: usize,
        hub_neighbors: BitSet,
    },
    FullDegreeRemoval {
        side: Side,
        vertex: usize,
        neighbors: BitSet,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Reduced,
    /// The budget cannot be met: too many forced stars, or a kernel side larger than `2^k`.
    RejectedBySizeBound,
}

#[derive(Clone, Debug)]
pub struct KernelResult {
    pub kernel: BipartiteGraph,
    /// Number of pendant removals; each one accounts for exactly one biclique.
    pub parameter_offset: usize,
    pub trace: Vec<ReductionEvent>,
    pub verdict: Verdict,
    /// Kernel left index -> input left index.
    pub left_map: Vec<usize>,
    /// Kernel right index -> input right index.
    pub right_map: Vec<usize>,
    original: BipartiteGraph,
}

struct Working<'a> {
    g: &'a BipartiteGraph,
    alive_left: BitSet,
    alive_right: BitSet,
}

impl Working<'_> {
    fn alive(&self, side: Side) -> &BitSet {
        match side {
            Side::Left => &self.alive_left,
            Side::Right => &self.alive_right,
        }
    }

    fn kill(&mut self, side: Side, v: usize) {
        match side {
            Side::Left => self.alive_left.remove(v),
            Side::Right => self.alive_right.remove(v),
        }
    }

    fn neighbors(&self, side: Side, v: usize) -> BitSet {
        self.g.neighbors(side, v).intersection(self.alive(side.opposite()))
    }

    fn vertices(&self) -> impl Iterator<Item = (Side, usize)> + '_ {
        self.alive_left
            .iter()
            .map(|v| (Side::Left, v))
            .chain(self.alive_right.iter().map(|v| (Side::Right, v)))
    }

    fn find_isolated(&self) -> Option<ReductionEvent> {
        self.vertices()
            .find(|&(side, v)| !self.g.neighbors(side, v).intersects(self.alive(side.opposite())))
            .map(|(side, vertex)| ReductionEvent::IsolatedRemoval { side, vertex })
    }

    fn find_twin(&self) -> Option<ReductionEvent> {
        for side in [Side::Left, Side::Right] {
            let mut seen: BTreeMap<BitSet, usize> = BTreeMap::new();
            for v in self.alive(side) {
                let ns = self.neighbors(side, v);
                if let Some(&kept) = seen.get(&ns) {
                    return Some(ReductionEvent::TwinMerge { side, removed: v, kept });
                }
                seen.insert(ns, v);
            }
        }
        None
    }

    fn find_pendant(&self) -> Option<ReductionEvent> {
        self.vertices().find_map(|(side, v)| {
            let ns = self.neighbors(side, v);
            if ns.count() != 1 {
                return None;
            }
            let hub = ns.first()?;
            Some(ReductionEvent::PendantRemoval {
                side,
                pendant: v,
                hub,
                hub_neighbors: self.neighbors(side.opposite(), hub),
            })
        })
    }

    fn find_full_degree(&self) -> Option<ReductionEvent> {
        self.vertices().find_map(|(side, v)| {
            let ns = self.neighbors(side, v);
            (!ns.is_empty() && ns == *self.alive(side.opposite())).then_some(ReductionEvent::FullDegreeRemoval {
                side,
                vertex: v,
                neighbors: ns,
            })
        })
    }

    fn apply(&mut self, event: &ReductionEvent) {
        match *event {
            ReductionEvent::IsolatedRemoval { side, vertex } => self.kill(side, vertex),
            ReductionEvent::TwinMerge { side, removed, .. } => self.kill(side, removed),
            ReductionEvent::PendantRemoval { side, pendant, hub, .. } => {
                self.kill(side, pendant);
                self.kill(side.opposite(), hub);
            }
            ReductionEvent::FullDegreeRemoval { side, vertex, .. } => self.kill(side, vertex),
        }
    }
}

/// Reduces `g` to a kernel. With a budget, also reports whether the budget is
/// already ruled out by the per-side `2^k` bound on a twin-free kernel.
pub fn kernelize(g: &BipartiteGraph, k_budget: Option<usize>) -> KernelResult {
    let mut w = Working {
        g,
        alive_left: BitSet::full(g.left_count()),
        alive_right: BitSet::full(g.right_count()),
    };
    let mut trace = Vec::new();
    loop {
        let event = w
            .find_isolated()
            .or_else(|| w.find_twin())
            .or_else(|| w.find_pendant())
            .or_else(|| w.find_full_degree());
        match event {
            Some(e) => {
                w.apply(&e);
                trace.push(e);
            }
            None => break,
        }
    }

    let left_map = w.alive_left.to_vec();
    let right_map = w.alive_right.to_vec();
    let mut kernel = BipartiteGraph::empty(left_map.len(), right_map.len());
    for (ka, &a) in left_map.iter().enumerate() {
        for (kb, &b) in right_map.iter().enumerate() {
            if g.has_edge(a, b) {
                kernel.add_edge(ka, kb);
            }
        }
    }
    let parameter_offset = trace
        .iter()
        .filter(|e| matches!(e, ReductionEvent::PendantRemoval { .. }))
        .count();
    let verdict = match k_budget {
        Some(k) if !within_size_bound(&kernel, parameter_offset, k) => Verdict::RejectedBySizeBound,
        _ => Verdict::Reduced,
    };
    KernelResult {
        kernel,
        parameter_offset,
        trace,
        verdict,
        left_map,
        right_map,
        original: g.clone(),
    }
}

pub(crate) fn within_size_bound(kernel: &BipartiteGraph, offset: usize, k: usize) -> bool {
    let Some(rest) = k.checked_sub(offset) else {
        return false;
    };
    // In a twin-free graph covered by `rest` bicliques, same-side vertices have
    // distinct membership signatures, so each side has at most 2^rest vertices.
    let cap = 1usize.checked_shl(rest as u32).filter(|_| rest < usize::BITS as usize);
    match cap {
        Some(cap) => kernel.left_count() <= cap && kernel.right_count() <= cap,
        None => true,
    }
}

impl KernelResult {
    pub fn original(&self) -> &BipartiteGraph {
        &self.original
    }

    /// Maps a kernel-indexed biclique to input indices.
    pub fn expand(&self, b: &Biclique) -> Biclique {
        Biclique::new(
            BitSet::from_indices(self.original.left_count(), b.left.iter().map(|i| self.left_map[i])),
            BitSet::from_indices(self.original.right_count(), b.right.iter().map(|j| self.right_map[j])),
        )
    }

    /// Turns a cover of the kernel into a cover of the input graph by replaying
    /// the trace backwards.
    ///
    /// The result has `kernel_cover.size() + parameter_offset` bicliques, plus
    /// one when a full-degree vertex is restored onto an empty cover.
    pub fn lift(&self, kernel_cover: &BicliqueCover) -> Result<BicliqueCover> {
        if !self.kernel.covers(kernel_cover) {
            return Err(Error::ContractViolation(format!(
                "lift: {} bicliques do not cover the {}+{} kernel",
                kernel_cover.size(),
                self.kernel.left_count(),
                self.kernel.right_count()
            )));
        }
        let mut cover: Vec<Biclique> = kernel_cover.bicliques.iter().map(|b| self.expand(b)).collect();
        let (n, m) = (self.original.left_count(), self.original.right_count());
        let singleton = |side: Side, v: usize| BitSet::from_indices(if side == Side::Left { n } else { m }, [v]);

        for event in self.trace.iter().rev() {
            match event {
                ReductionEvent::IsolatedRemoval { .. } => {}
                ReductionEvent::TwinMerge { side, removed, kept } => {
                    for b in cover.iter_mut().filter(|b| b.side(*side).contains(*kept)) {
                        b.side_mut(*side).insert(*removed);
                    }
                }
                ReductionEvent::PendantRemoval {
                    side,
                    hub,
                    hub_neighbors,
                    ..
                } => {
                    let hub_side = side.opposite();
                    let mut star = Biclique::new(BitSet::new(n), BitSet::new(m));
                    *star.side_mut(hub_side) = singleton(hub_side, *hub);
                    *star.side_mut(*side) = hub_neighbors.clone();
                    cover.push(star);
                }
                ReductionEvent::FullDegreeRemoval { side, vertex, neighbors } => {
                    if !cover.is_empty() {
                        for b in cover.iter_mut() {
                            b.side_mut(*side).insert(*vertex);
                        }
                    } else if !neighbors.is_empty() {
                        let mut star = Biclique::new(BitSet::new(n), BitSet::new(m));
                        *star.side_mut(*side) = singleton(*side, *vertex);
                        *star.side_mut(side.opposite()) = neighbors.clone();
                        cover.push(star);
                    }
                }
            }
        }

        let lifted = BicliqueCover::new(cover);
        if !self.original.covers(&lifted) {
            return Err(Error::ContractViolation("lifted cover does not cover the input graph".into()));
        }
        Ok(lifted)
    }
}
