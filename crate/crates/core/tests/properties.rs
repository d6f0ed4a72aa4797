//! Solver properties checked against brute-force oracles.

use modresc_core::*;
use modresc_oracle::{self as oracle, MaskGraph};
use proptest::prelude::{prop_assert, prop_assert_eq, proptest, ProptestConfig};
use proptest::strategy::Strategy as _;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn to_graph(g: &MaskGraph) -> BipartiteGraph {
    BipartiteGraph::from_edges(g.n, g.m, g.edges())
}

fn random_mask(rng: &mut ChaCha8Rng, n: usize, m: usize, density: f64) -> MaskGraph {
    let rows = (0..n)
        .map(|_| (0..m).filter(|_| rng.gen_bool(density)).fold(0u32, |acc, b| acc | 1 << b))
        .collect();
    MaskGraph::new(n, m, rows)
}

fn minimum(g: &BipartiteGraph, algorithm: Algorithm, kernelize: bool) -> usize {
    let cfg = SolverConfig { algorithm, kernelize, ..SolverConfig::default() };
    let s = min_cover(g, &cfg).unwrap();
    assert!(g.covers(&s.cover));
    assert!(verify_solution(&g.to_biadjacency(), &s.pair).unwrap());
    s.k
}

/// Smallest `k` accepted by a decision procedure, scanning upward.
fn smallest_k(g: &BipartiteGraph, decide: fn(&BipartiteGraph, usize) -> Option<BicliqueCover>) -> usize {
    (0..=g.left_count().min(g.right_count()))
        .find(|&k| decide(g, k).is_some_and(|c| c.size() <= k && g.covers(&c)))
        .expect("the trivial bound is always feasible")
}

#[test]
fn matrix_rank_equals_cover_number_on_all_3x3() {
    for code in 0..512 {
        let mg = MaskGraph::from_code(3, 3, code);
        let via_matrices = oracle::min_k_matrices(&mg);
        let via_bicliques = oracle::min_cover_all_bicliques(&mg);
        assert_eq!(via_matrices, via_bicliques, "graph {code}");
        assert_eq!(minimum(&to_graph(&mg), Algorithm::Branch, true), via_bicliques, "graph {code}");
    }
}

#[test]
fn decision_procedures_agree_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for trial in 0..500 {
        let (n, m) = if trial % 2 == 0 { (4, 4) } else { (5, 5) };
        let mg = random_mask(&mut rng, n, m, 0.5);
        let g = to_graph(&mg);
        let expected = oracle::min_cover(&mg);
        for k in 0..=n.min(m) {
            let p = solve_partition(&g, k).is_some();
            let s = solve_subsets(&g, k).is_some();
            let b = solve_branch(&g, k).is_some();
            assert_eq!((p, s, b), (k >= expected, k >= expected, k >= expected), "trial {trial} k {k} rows {:?}", mg.rows);
        }
    }
}

#[test]
fn pendant_removal_costs_exactly_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut checked = 0;
    for _ in 0..400 {
        let mg = random_mask(&mut rng, 4, 4, 0.45);
        let Some((a, b)) = (0..4).find_map(|a| (mg.rows[a].count_ones() == 1).then(|| (a, mg.rows[a].trailing_zeros() as usize))) else {
            continue;
        };
        // Remove left `a` and right `b` by clearing their edges.
        let rows = mg.rows.iter().enumerate().map(|(i, &r)| if i == a { 0 } else { r & !(1 << b) }).collect();
        let reduced = MaskGraph::new(4, 4, rows);
        assert_eq!(oracle::min_cover(&mg), oracle::min_cover(&reduced) + 1, "rows {:?}", mg.rows);
        checked += 1;
    }
    assert!(checked > 50);
}

#[test]
fn full_degree_removal_is_safe_without_pendants() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut checked = 0;
    for _ in 0..2000 {
        let mg = random_mask(&mut rng, 4, 4, 0.6);
        let degrees_ok = (0..4).all(|a| mg.rows[a].count_ones() != 1)
            && (0..4).all(|b| (0..4).filter(|&a| mg.has_edge(a, b)).count() != 1);
        let Some(full) = (0..4).find(|&a| mg.rows[a] == 0b1111) else { continue };
        if !degrees_ok {
            continue;
        }
        let rows = mg.rows.iter().enumerate().map(|(i, &r)| if i == full { 0 } else { r }).collect();
        let without = MaskGraph::new(4, 4, rows);
        assert_eq!(oracle::min_cover(&mg), oracle::min_cover(&without).max(1), "rows {:?}", mg.rows);
        checked += 1;
    }
    assert!(checked > 30, "only {checked} instances");
}

#[test]
fn kernel_lift_is_optimal_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..300 {
        let mg = random_mask(&mut rng, 5, 5, 0.5);
        let g = to_graph(&mg);
        let kr = kernelize(&g, None);
        let kernel_min = smallest_k(&kr.kernel, solve_branch);
        let kernel_cover = solve_branch(&kr.kernel, kernel_min).unwrap();
        let lifted = kr.lift(&kernel_cover).unwrap();
        assert!(g.covers(&lifted));
        let expected = oracle::min_cover(&mg);
        assert_eq!(kernel_min + kr.parameter_offset, expected, "rows {:?}", mg.rows);
        assert_eq!(lifted.size(), expected);
        assert!(kernelize(&kr.kernel, None).trace.is_empty());
    }
}

#[test]
fn enumeration_matches_brute_force_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..300 {
        let (n, m) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let density = rng.gen_range(0.2..0.9);
        let mg = random_mask(&mut rng, n, m, density);
        let mut expected: Vec<(u32, u32)> = oracle::maximal_bicliques(&mg);
        expected.sort();
        let mut got: Vec<(u32, u32)> = maximal_bicliques(&to_graph(&mg))
            .iter()
            .map(|b| (b.left.iter().fold(0, |a, i| a | 1 << i), b.right.iter().fold(0, |a, j| a | 1 << j)))
            .collect();
        got.sort();
        assert_eq!(got, expected, "rows {:?}", mg.rows);
    }
}

fn mask_graph(max: usize) -> impl proptest::strategy::Strategy<Value = MaskGraph> {
    (1..=max, 1..=max).prop_flat_map(|(n, m)| {
        proptest::collection::vec(0u32..(1 << m), n).prop_map(move |rows| MaskGraph::new(n, m, rows))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn solution_invariants(mg in mask_graph(6)) {
        let g = to_graph(&mg);
        let s = min_cover(&g, &SolverConfig::default()).unwrap();
        prop_assert!(s.k <= mg.n.min(mg.m));
        prop_assert!(s.stats.lower_bound <= s.k && s.k <= s.stats.upper_bound);
        prop_assert_eq!(s.pair.gene_count(), s.k);
        prop_assert!(g.covers(&s.cover));
        prop_assert!(verify_solution(&g.to_biadjacency(), &s.pair).unwrap());
        let plain = min_cover(&g, &SolverConfig { kernelize: false, ..SolverConfig::default() }).unwrap();
        prop_assert_eq!(plain.k, s.k);
        let linear = min_cover(&g, &SolverConfig { strategy: modresc_core::Strategy::Incremental, ..SolverConfig::default() }).unwrap();
        prop_assert_eq!(linear.k, s.k);
    }

    #[test]
    fn cover_matrix_round_trips(mg in mask_graph(6)) {
        let g = to_graph(&mg);
        let cover = min_cover(&g, &SolverConfig::default()).unwrap().cover;
        let pair = cover_to_matrices(&g, &cover).unwrap();
        let back = matrices_to_cover(&g, &pair).unwrap();
        prop_assert!(g.covers(&back));
        prop_assert!(back.size() <= cover.size());
        prop_assert_eq!(&back, &cover.clone().canonical());
        let again = cover_to_matrices(&g, &back).unwrap();
        prop_assert!(verify_solution(&g.to_biadjacency(), &again).unwrap());
    }

    #[test]
    fn forward_bridge_round_trip_never_grows(mg in mask_graph(5)) {
        let g = to_graph(&mg);
        let kr = kernelize(&g, None);
        let cover = min_cover(&kr.kernel, &SolverConfig { kernelize: false, ..SolverConfig::default() }).unwrap().cover;
        let cliques = biclique_to_clique_cover(&cover, &kr.kernel).unwrap();
        prop_assert_eq!(cliques.size(), cover.size() + 2);
        prop_assert!(saturate(&kr.kernel).covers(&cliques));
        let back = clique_to_biclique_cover(&cliques, &kr.kernel).unwrap();
        prop_assert!(kr.kernel.covers(&back));
        prop_assert!(back.size() <= cover.size());
    }
}
