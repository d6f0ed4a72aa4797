//! Serializable reports for the `solve` and `kernelize` subcommands.

use modresc_core::{Algorithm, BoolMatrix, CoverSolution, KernelResult, ReductionEvent, Side, SolverConfig, Strategy};
use serde::Serialize;

use crate::format::matrix_to_json;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BicliqueJson {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatsJson {
    pub nodes: u64,
    pub partitions_tested: u64,
    pub kernel_offset: usize,
    pub kernel_rows: usize,
    pub kernel_cols: usize,
    pub lower_bound: usize,
    pub upper_bound: usize,
    pub decisions: u32,
    /// Wall time in milliseconds; 0 in deterministic mode.
    pub ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfigJson {
    pub algorithm: &'static str,
    pub strategy: &'static str,
    pub max_k: Option<usize>,
    pub kernelize: bool,
    pub deterministic: bool,
    pub seed: u64,
}

/// Output of `solve`. Field order is the JSON key order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    #[serde(rename = "M")]
    pub mod_genes: Vec<Vec<u8>>,
    #[serde(rename = "R")]
    pub resc_genes: Vec<Vec<u8>>,
    pub bicliques: Vec<BicliqueJson>,
    pub stats: StatsJson,
    pub edges: usize,
    pub config: ConfigJson,
}

pub fn algorithm_name(a: Algorithm) -> &'static str {
    match a {
        Algorithm::Partition => "partition",
        Algorithm::Subsets => "subsets",
        Algorithm::Branch => "branch",
    }
}

pub fn strategy_name(s: Strategy) -> &'static str {
    match s {
        Strategy::Incremental => "incremental",
        Strategy::Dichotomy => "dichotomy",
    }
}

impl RunReport {
    pub fn new(c: &BoolMatrix, config: &SolverConfig, solution: &CoverSolution, ms: u64) -> Self {
        let s = &solution.stats;
        RunReport {
            n: c.rows(),
            m: c.cols(),
            k: solution.k,
            mod_genes: matrix_to_json(&solution.pair.mod_genes),
            resc_genes: matrix_to_json(&solution.pair.resc_genes),
            bicliques: solution
                .cover
                .bicliques
                .iter()
                .map(|b| BicliqueJson { rows: b.left.to_vec(), cols: b.right.to_vec() })
                .collect(),
            stats: StatsJson {
                nodes: s.nodes,
                partitions_tested: s.partitions_tested,
                kernel_offset: s.kernel_offset,
                kernel_rows: s.kernel_left,
                kernel_cols: s.kernel_right,
                lower_bound: s.lower_bound,
                upper_bound: s.upper_bound,
                decisions: s.decisions,
                ms: if config.deterministic { 0 } else { ms },
            },
            edges: c.count_ones(),
            config: ConfigJson {
                algorithm: algorithm_name(config.algorithm),
                strategy: strategy_name(config.strategy),
                max_k: config.max_k,
                kernelize: config.kernelize,
                deterministic: config.deterministic,
                seed: config.seed,
            },
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("matrix {}x{} with {} ones\nk = {}\n", self.n, self.m, self.edges, self.k);
        for (l, b) in self.bicliques.iter().enumerate() {
            out.push_str(&format!("gene {l}: {}\n", biclique_line(&b.rows, &b.cols)));
        }
        let grid = |rows: &[Vec<u8>]| -> String {
            rows.iter()
                .map(|r| r.iter().map(|&x| if x == 1 { '1' } else { '0' }).collect::<String>() + "\n")
                .collect()
        };
        out.push_str("M:\n");
        out.push_str(&grid(&self.mod_genes));
        out.push_str("R:\n");
        out.push_str(&grid(&self.resc_genes));
        out.push_str(&format!(
            "nodes {} | kernel offset {} | kernel {}x{} | bounds [{}, {}] | {} ms\n",
            self.stats.nodes,
            self.stats.kernel_offset,
            self.stats.kernel_rows,
            self.stats.kernel_cols,
            self.stats.lower_bound,
            self.stats.upper_bound,
            self.stats.ms
        ));
        out
    }
}

/// `rows=0,2 cols=1`
pub fn biclique_line(rows: &[usize], cols: &[usize]) -> String {
    let join = |xs: &[usize]| xs.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
    format!("rows={} cols={}", join(rows), join(cols))
}

fn side_name(side: Side) -> &'static str {
    match side {
        Side::Left => "row",
        Side::Right => "col",
    }
}

/// One human-readable line per reduction event. Rows are left vertices, columns right ones.
pub fn trace_lines(kr: &KernelResult) -> Vec<String> {
    let list = |s: &modresc_core::BitSet| s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
    kr.trace
        .iter()
        .map(|e| match e {
            ReductionEvent::IsolatedRemoval { side, vertex } => format!("isolated {} {vertex}", side_name(*side)),
            ReductionEvent::TwinMerge { side, removed, kept } => {
                format!("twin {} {removed} merged into {kept}", side_name(*side))
            }
            ReductionEvent::PendantRemoval { side, pendant, hub, hub_neighbors } => format!(
                "pendant {} {pendant} with {} {hub} (star {}s {})",
                side_name(*side),
                side_name(side.opposite()),
                side_name(*side),
                list(hub_neighbors)
            ),
            ReductionEvent::FullDegreeRemoval { side, vertex, neighbors } => {
                format!("full-degree {} {vertex} (neighbors {})", side_name(*side), list(neighbors))
            }
        })
        .collect()
}

pub fn kernel_json(kr: &KernelResult) -> serde_json::Value {
    serde_json::json!({
        "rows": kr.kernel.left_count(),
        "cols": kr.kernel.right_count(),
        "kernel": matrix_to_json(&kr.kernel.to_biadjacency()),
        "offset": kr.parameter_offset,
        "row_map": kr.left_map,
        "col_map": kr.right_map,
        "trace": trace_lines(kr),
    })
}
