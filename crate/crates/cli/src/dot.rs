use std::fmt::Write as _;

use modresc_core::{BicliqueCover, BipartiteGraph};

const PALETTE: [&str; 10] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
];

/// Graphviz description of `g`. Each edge is drawn once per biclique that
/// covers it, colored by biclique index.
pub fn render_cover(g: &BipartiteGraph, cover: &BicliqueCover) -> String {
    let mut out = String::from("graph cover {\n  rankdir=LR;\n  node [shape=circle];\n");
    out.push_str("  subgraph cluster_rows { label=\"rows\";");
    for a in 0..g.left_count() {
        let _ = write!(out, " r{a};");
    }
    out.push_str(" }\n  subgraph cluster_cols { label=\"cols\";");
    for b in 0..g.right_count() {
        let _ = write!(out, " c{b};");
    }
    out.push_str(" }\n");
    for (a, b) in g.edges() {
        let owners: Vec<usize> = cover
            .bicliques
            .iter()
            .enumerate()
            .filter(|(_, bc)| bc.contains_edge(a, b))
            .map(|(l, _)| l)
            .collect();
        if owners.is_empty() {
            let _ = writeln!(out, "  r{a} -- c{b} [style=dashed];");
        }
        for l in owners {
            let _ = writeln!(out, "  r{a} -- c{b} [color=\"{}\", label=\"{l}\"];", PALETTE[l % PALETTE.len()]);
        }
    }
    out.push_str("}\n");
    out
}
