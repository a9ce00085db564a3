//! Acceptance suite: one test per release criterion, each printing a
//! PASS line with the measured quantities (run with `--nocapture` to see
//! them). Tolerances and runtime ceilings are pinned in the assertions.

mod common;

use std::time::Instant;

use common::*;
use csa_core::clustering::{alcc, alcc_without, is_triangle_free, TriangleIndex};
use csa_core::generators::{gen_ba, gen_er, gen_ws_torus};
use csa_core::influence::{activation_bound, ic_activation_frequency, ic_spread_random_seed};
use csa_core::reduction::{reduce_3sat, sat_brute_force};
use csa_core::solvers::{
    baseline_betweenness, baseline_lcc_greedy, baseline_max_degree, baseline_random, faga,
    faga_delta, optimal_exhaustive, optimal_exhaustive_over, simple_greedy, DeltaMode,
};
use csa_core::timer::NullStopwatch;
use csa_core::{Graph, VertexId};
use rand::rngs::StdRng;
use rand::SeedableRng;

/// Criterion 1: expected ALCC under one uniform random failure never
/// exceeds the current ALCC, across 200 seeded ER graphs.
#[test]
fn criterion_01_random_failure_theorem() {
    let start = Instant::now();
    for i in 0..200u64 {
        let n = 5 + (i as usize * 3) % 26; // 5..=30
        let p = 0.1 * (1 + i % 9) as f64; // 0.1..=0.9
        let g = gen_er(n, p, i).unwrap();
        let a = alcc(&g).unwrap();
        let mean = g
            .alive_iter()
            .map(|u| alcc_without(&g, u).unwrap())
            .sum::<f64>()
            / g.alive_count() as f64;
        assert!(
            mean <= a + 1e-12,
            "graph {} (n={}, p={}): {} > {}",
            i,
            n,
            p,
            mean,
            a
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "took {:?}", elapsed);
    println!(
        "ACCEPTANCE 1 PASS: random-failure expectation bound on 200 ER graphs in {:?}",
        elapsed
    );
}

/// Criterion 2: the exact-mode incremental score equals the brute-force
/// ALCC difference for every candidate at every greedy step.
#[test]
fn criterion_02_faga_delta_exactness() {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for i in 0..50u64 {
        let n = 8 + (i as usize * 5) % 33; // <= 40
        let p = 0.10 + 0.02 * (i % 10) as f64;
        let mut g = gen_er(n, p, 900 + i).unwrap();
        let mut idx = TriangleIndex::build(&g);
        for _step in 0..5 {
            if g.alive_count() < 3 {
                break;
            }
            let base = alcc(&g).unwrap();
            let mut best: Option<(f64, VertexId)> = None;
            for u in g.alive_iter() {
                let d = faga_delta(&g, &idx, u, DeltaMode::Exact).unwrap();
                let oracle = base - alcc_without(&g, u).unwrap();
                let err = (d - oracle).abs();
                worst = worst.max(err);
                assert!(err < 1e-9, "graph {} vertex {}: |{} - {}|", i, u, d, oracle);
                if best.map_or(true, |(bd, _)| d > bd) {
                    best = Some((d, u));
                }
            }
            let (_, u) = best.unwrap();
            idx.retire_vertex(&g, u);
            g.remove_vertex(u).unwrap();
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 30.0, "took {:?}", elapsed);
    println!(
        "ACCEPTANCE 2 PASS: exact delta vs oracle on 50 graphs (worst error {:.2e}) in {:?}",
        worst, elapsed
    );
}

/// Criterion 3: exact-mode trajectories are non-increasing on the whole
/// test corpus.
#[test]
fn criterion_03_monotone_trajectories() {
    let mut graphs = small_corpus(40, 40);
    graphs.push(gen_ws_torus(7, 2, 0.2, 3).unwrap());
    graphs.push(gen_ba(120, 3, 4).unwrap());
    graphs.push(gen_er(80, 0.08, 5).unwrap());
    let mut runs = 0;
    for (i, g) in graphs.into_iter().enumerate() {
        let n = g.alive_count();
        if n < 3 {
            continue;
        }
        for k in [1, (n / 4).max(1), n - 1] {
            let res = faga(&g, k, DeltaMode::Exact).unwrap();
            for (j, w) in res.alcc_trajectory.windows(2).enumerate() {
                assert!(
                    w[1] <= w[0] + 1e-12,
                    "graph {} k {} step {}: {} -> {}",
                    i,
                    k,
                    j,
                    w[0],
                    w[1]
                );
            }
            runs += 1;
        }
    }
    println!(
        "ACCEPTANCE 3 PASS: {} exact-mode trajectories all non-increasing",
        runs
    );
}

/// Criterion 4: on ER(35, 0.2) with k = 7 the exhaustive optimum
/// dominates every heuristic, and in a majority of seeds its residual
/// graph is triangle-free.
#[test]
fn criterion_04_optimal_at_reproduction_scale() {
    let start = Instant::now();
    let mut triangle_free = 0;
    for seed in 0..10u64 {
        let g = gen_er(35, 0.2, seed).unwrap();
        let opt = optimal_exhaustive(&g, 7).unwrap();
        let best = opt.final_alcc();
        let heuristics = [
            faga(&g, 7, DeltaMode::Exact).unwrap().final_alcc(),
            faga(&g, 7, DeltaMode::Paper).unwrap().final_alcc(),
            simple_greedy(&g, 7).unwrap().final_alcc(),
            baseline_random(&g, 7, seed, &mut NullStopwatch).unwrap().final_alcc(),
            baseline_max_degree(&g, 7, &mut NullStopwatch).unwrap().final_alcc(),
            baseline_lcc_greedy(&g, 7, &mut NullStopwatch).unwrap().final_alcc(),
            baseline_betweenness(&g, 7, &mut NullStopwatch).unwrap().final_alcc(),
        ];
        for (i, &h) in heuristics.iter().enumerate() {
            assert!(
                best <= h + 1e-12,
                "seed {}: optimal {} beaten by heuristic {} ({})",
                seed,
                best,
                i,
                h
            );
        }
        let mut residual = g.clone();
        for &u in &opt.removed {
            residual.remove_vertex(u).unwrap();
        }
        if is_triangle_free(&residual) {
            assert_eq!(best, 0.0);
            triangle_free += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(
        triangle_free >= 7,
        "only {}/10 optimal residuals triangle-free",
        triangle_free
    );
    assert!(elapsed.as_secs_f64() < 300.0, "took {:?}", elapsed);
    println!(
        "ACCEPTANCE 4 PASS: optimal dominated all heuristics on 10 seeds, {}/10 residuals triangle-free, in {:?}",
        triangle_free, elapsed
    );
}

/// Criterion 5: satisfiability of random 3-CNF formulas coincides with
/// the existence of a size-(m+2l) removal set making the reduction graph
/// triangle-free.
#[test]
fn criterion_05_reduction_correctness() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(2024);
    let mut sat_count = 0;
    for case in 0..30 {
        let (m, l) = [(2u32, 1usize), (2, 2), (3, 2)][case % 3];
        let f = random_formula(m, l, &mut rng);
        let satisfiable = sat_brute_force(&f).unwrap();
        let inst = reduce_3sat(&f).unwrap();
        let cands = inst.non_dummy_vertices();
        let best = optimal_exhaustive_over(&inst.graph, inst.k, &cands, 1 << 24).unwrap();
        let breakable = best.residual_alcc == 0.0;
        assert_eq!(
            breakable, satisfiable,
            "case {} ({:?}): reduction disagrees with brute force",
            case, f
        );
        if satisfiable {
            sat_count += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 120.0, "took {:?}", elapsed);
    println!(
        "ACCEPTANCE 5 PASS: 30 reductions, zero mismatches ({} satisfiable), in {:?}",
        sat_count, elapsed
    );
}

/// Criterion 6: the forward-listing triangle index agrees exactly with
/// cubic triple enumeration.
#[test]
fn criterion_06_triangle_index_vs_enumeration() {
    for i in 0..100u64 {
        let n = 3 + (i as usize * 7) % 38; // <= 40
        let p = 0.1 + 0.08 * (i % 10) as f64;
        let g = gen_er(n, p, 7000 + i).unwrap();
        let idx = TriangleIndex::build(&g);
        let oracle = TriangleOracle::build(&g);
        assert_eq!(idx.total_triangles(), oracle.total, "graph {}", i);
        for u in g.alive_iter() {
            assert_eq!(
                idx.node_triangles(u),
                oracle.t_node[u as usize],
                "graph {} vertex {}",
                i,
                u
            );
            for v in g.alive_neighbors(u) {
                assert_eq!(
                    idx.edge_triangles(&g, u, v),
                    oracle.edge_triangles(u, v),
                    "graph {} edge ({},{})",
                    i,
                    u,
                    v
                );
            }
        }
    }
    println!("ACCEPTANCE 6 PASS: triangle index exact on 100 graphs");
}

/// Criterion 7: at desk scale the exact-mode adaptive greedy ends at or
/// below the random / max-degree / betweenness baselines in at least 8 of
/// 10 seeds per graph model.
#[test]
fn criterion_07_method_ordering() {
    let start = Instant::now();
    for model in ["er", "ws", "ba"] {
        let mut wins = 0;
        for seed in 0..10u64 {
            let g = match model {
                "er" => gen_er(2000, 0.005, seed).unwrap(),
                "ws" => gen_ws_torus(45, 3, 0.3, seed).unwrap(),
                _ => gen_ba(1500, 3, seed).unwrap(),
            };
            let k = g.alive_count() / 20; // 5%
            let ours = faga(&g, k, DeltaMode::Exact).unwrap().final_alcc();
            let baselines = [
                baseline_random(&g, k, seed, &mut NullStopwatch).unwrap().final_alcc(),
                baseline_max_degree(&g, k, &mut NullStopwatch).unwrap().final_alcc(),
                baseline_betweenness(&g, k, &mut NullStopwatch).unwrap().final_alcc(),
            ];
            if baselines.iter().all(|&b| ours <= b + 1e-12) {
                wins += 1;
            }
        }
        assert!(wins >= 8, "{}: adaptive greedy won only {}/10 seeds", model, wins);
        println!(
            "ACCEPTANCE 7 ({}) PASS: adaptive greedy at/below all baselines in {}/10 seeds",
            model, wins
        );
    }
    println!(
        "ACCEPTANCE 7 PASS: method ordering held on all three models in {:?}",
        start.elapsed()
    );
}

/// Criterion 8: across the rewiring grid, clustering and expected IC
/// spread move together (Spearman >= 0.8).
#[test]
fn criterion_08_influence_correlation() {
    let start = Instant::now();
    let mut alccs = Vec::new();
    let mut spreads = Vec::new();
    for i in 0..10 {
        let p = i as f64 / 10.0;
        let g = gen_ws_torus(20, 3, p, 111).unwrap();
        alccs.push(alcc(&g).unwrap());
        let est = ic_spread_random_seed(&g, 0.5, 2000, 222).unwrap();
        spreads.push(est.mean_activations);
    }
    assert!(alccs[0] > 0.0);
    let rho = spearman(&alccs, &spreads);
    let elapsed = start.elapsed();
    assert!(rho >= 0.8, "Spearman = {} (alcc {:?}, spread {:?})", rho, alccs, spreads);
    assert!(elapsed.as_secs_f64() < 120.0, "took {:?}", elapsed);
    println!(
        "ACCEPTANCE 8 PASS: Spearman(alcc, spread) = {:.3} over the rewiring grid in {:?}",
        rho, elapsed
    );
}

/// Criterion 9: the shared-neighbor activation bound holds empirically on
/// the two-endpoint gadget.
#[test]
fn criterion_09_activation_bound() {
    let trials = 100_000u64;
    for j in 0..=3u32 {
        let mut edges = vec![(0u32, 1u32)];
        for c in 0..j {
            edges.push((0, 2 + c));
            edges.push((1, 2 + c));
        }
        let g = Graph::from_pairs(2 + j as usize, edges).unwrap();
        let freq = ic_activation_frequency(&g, &[0], 0.5, trials, 515).unwrap();
        let p_hat = freq[1];
        let bound = activation_bound(j);
        let sigma = (bound * (1.0 - bound) / trials as f64).sqrt();
        assert!(
            p_hat >= bound - 3.0 * sigma,
            "j = {}: empirical {} < bound {} - 3 sigma",
            j,
            p_hat,
            bound
        );
        println!(
            "ACCEPTANCE 9 (k={}) PASS: empirical {:.4} >= bound {:.4} - 3σ",
            j, p_hat, bound
        );
    }
    println!("ACCEPTANCE 9 PASS: activation bound held for k in 0..=3");
}

/// Criterion 10: the adaptive greedy finishes ER(10^4, 0.001), k = 100 in
/// seconds and is an order of magnitude faster than the non-adaptive
/// greedy at N = 2000.
#[test]
fn criterion_10_performance() {
    let g = gen_er(10_000, 0.001, 77).unwrap();
    let start = Instant::now();
    let res = faga(&g, 100, DeltaMode::Exact).unwrap();
    let faga_large = start.elapsed();
    assert_eq!(res.removed.len(), 100);
    assert!(faga_large.as_secs_f64() < 10.0, "FAGA took {:?}", faga_large);

    let g = gen_er(2000, 0.005, 78).unwrap();
    let start = Instant::now();
    let fast = faga(&g, 20, DeltaMode::Exact).unwrap();
    let t_fast = start.elapsed();
    let start = Instant::now();
    let slow = simple_greedy(&g, 20).unwrap();
    let t_slow = start.elapsed();
    assert_eq!(fast.removed.len(), slow.removed.len());
    let ratio = t_slow.as_secs_f64() / t_fast.as_secs_f64();
    assert!(
        ratio >= 10.0,
        "speedup only {:.1}x ({:?} vs {:?})",
        ratio,
        t_fast,
        t_slow
    );
    println!(
        "ACCEPTANCE 10 PASS: FAGA n=10^4 k=100 in {:?}; {:.0}x faster than simple greedy at n=2000",
        faga_large, ratio
    );
}
