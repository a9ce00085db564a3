//! Comparison strategies: uniform random failure and adaptive removal by
//! degree, local clustering coefficient, or betweenness centrality.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::clustering::local_cc_unchecked;
use crate::graph::{Graph, VertexId};
use crate::solvers::{adaptive_attack, apply_sequence, argmax_alive, validate_k, AttackResult, Method};
use crate::timer::Stopwatch;
use crate::Result;

/// Removes `k` distinct vertices drawn uniformly without replacement from
/// the initial alive vertex set. Deterministic per seed.
pub fn baseline_random(
    g: &Graph,
    k: usize,
    seed: u64,
    clock: &mut dyn Stopwatch,
) -> Result<AttackResult> {
    validate_k(g, k)?;
    let mut rng = crate::rng::seeded(seed);
    let mut pool: Vec<VertexId> = g.alive_iter().collect();
    for i in 0..k {
        let j = rng.random_range(i..pool.len());
        pool.swap(i, j);
    }
    pool.truncate(k);
    let mut res = apply_sequence(g, &pool, Method::RandomFail, Some(seed), clock)?;
    res.seed = Some(seed);
    Ok(res)
}

/// Adaptively removes the alive vertex of maximum current degree.
pub fn baseline_max_degree(g: &Graph, k: usize, clock: &mut dyn Stopwatch) -> Result<AttackResult> {
    adaptive_attack(g, k, Method::MaxDegree, clock, |h| {
        argmax_alive(h, |u| h.degree(u) as f64)
    })
}

/// Adaptively removes the alive vertex of maximum current local
/// clustering coefficient. A vertex's coefficient depends only on its
/// neighbor subgraph, so after each removal only the neighborhood of the
/// removed vertex is rescored.
pub fn baseline_lcc_greedy(g: &Graph, k: usize, clock: &mut dyn Stopwatch) -> Result<AttackResult> {
    validate_k(g, k)?;
    let mut lcc = vec![0.0f64; g.n_vertices()];
    for u in g.alive_iter() {
        lcc[u as usize] = local_cc_unchecked(g, u);
    }
    let mut last_removed: Option<VertexId> = None;
    adaptive_attack(g, k, Method::LccGreedy, clock, move |h| {
        if let Some(gone) = last_removed {
            for v in h.alive_neighbors(gone) {
                lcc[v as usize] = local_cc_unchecked(h, v);
            }
        }
        let u = argmax_alive(h, |u| lcc[u as usize]);
        last_removed = Some(u);
        u
    })
}

/// Exact shortest-path betweenness for the alive residual graph
/// (unweighted, endpoints excluded, no normalization). Dead vertices
/// score 0.
pub fn brandes_betweenness(g: &Graph) -> Vec<f64> {
    let n = g.n_vertices();
    let mut centrality = vec![0.0f64; n];
    let mut sigma = vec![0.0f64; n];
    let mut dist = vec![-1i64; n];
    let mut delta = vec![0.0f64; n];
    let mut preds: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    let mut stack: Vec<VertexId> = Vec::with_capacity(n);
    let mut queue: VecDeque<VertexId> = VecDeque::new();

    for s in g.alive_iter() {
        for u in g.alive_iter() {
            sigma[u as usize] = 0.0;
            dist[u as usize] = -1;
            delta[u as usize] = 0.0;
            preds[u as usize].clear();
        }
        stack.clear();
        queue.clear();
        sigma[s as usize] = 1.0;
        dist[s as usize] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            stack.push(v);
            for w in g.alive_neighbors(v) {
                if dist[w as usize] < 0 {
                    dist[w as usize] = dist[v as usize] + 1;
                    queue.push_back(w);
                }
                if dist[w as usize] == dist[v as usize] + 1 {
                    sigma[w as usize] += sigma[v as usize];
                    preds[w as usize].push(v);
                }
            }
        }
        while let Some(w) = stack.pop() {
            for &v in &preds[w as usize] {
                delta[v as usize] += sigma[v as usize] / sigma[w as usize] * (1.0 + delta[w as usize]);
            }
            if w != s {
                centrality[w as usize] += delta[w as usize];
            }
        }
    }
    // each unordered pair was accumulated from both endpoints
    for c in &mut centrality {
        *c *= 0.5;
    }
    centrality
}

/// Adaptively removes the alive vertex of highest current betweenness,
/// recomputing centrality after every removal.
pub fn baseline_betweenness(g: &Graph, k: usize, clock: &mut dyn Stopwatch) -> Result<AttackResult> {
    adaptive_attack(g, k, Method::Betweenness, clock, |h| {
        let scores = brandes_betweenness(h);
        argmax_alive(h, |u| scores[u as usize])
    })
}
