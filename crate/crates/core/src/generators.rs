//! Synthetic network models: Erdős–Rényi, Barabási–Albert preferential
//! attachment, and a two-dimensional Watts–Strogatz torus lattice with
//! k-hop closure and probabilistic rewiring.
//!
//! Every generator is a pure function of its parameters and seed.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use rand::distr::{Bernoulli, Distribution};
use rand::Rng;

use crate::error::Error;
use crate::graph::{Graph, VertexId};
use crate::Result;

/// Erdős–Rényi G(n, p): each unordered pair is an edge independently
/// with probability `p`.
pub fn gen_er(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut rng = crate::rng::seeded(seed);
    let coin = Bernoulli::new(p).expect("validated probability");
    let mut pairs = Vec::new();
    for u in 0..n as VertexId {
        for v in (u + 1)..n as VertexId {
            if coin.sample(&mut rng) {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_pairs(n, pairs)
}

/// Barabási–Albert preferential attachment: a seed clique on `m_attach`
/// vertices, then every new vertex attaches `m_attach` edges to distinct
/// existing vertices sampled proportionally to degree.
///
/// Edge count is deterministic: `C(m_attach, 2) + m_attach * (n - m_attach)`.
pub fn gen_ba(n: usize, m_attach: usize, seed: u64) -> Result<Graph> {
    if m_attach < 1 || n <= m_attach {
        return Err(Error::InvalidAttachment { n, m_attach });
    }
    let mut rng = crate::rng::seeded(seed);
    let mut pairs: Vec<(VertexId, VertexId)> = Vec::with_capacity(
        m_attach * (m_attach - 1) / 2 + m_attach * (n - m_attach),
    );
    // one entry per edge endpoint; sampling an index uniformly is
    // sampling a vertex proportionally to its degree
    let mut endpoints: Vec<VertexId> = Vec::with_capacity(2 * pairs.capacity());
    for u in 0..m_attach as VertexId {
        for v in (u + 1)..m_attach as VertexId {
            pairs.push((u, v));
            endpoints.push(u);
            endpoints.push(v);
        }
    }
    let mut targets: Vec<VertexId> = Vec::with_capacity(m_attach);
    for t in m_attach as VertexId..n as VertexId {
        targets.clear();
        while targets.len() < m_attach {
            let pick = if endpoints.is_empty() {
                // degenerate m_attach = 1 start: no edges yet, attach uniformly
                rng.random_range(0..t)
            } else {
                endpoints[rng.random_range(0..endpoints.len())]
            };
            if !targets.contains(&pick) {
                targets.push(pick);
            }
        }
        for &v in &targets {
            pairs.push((v, t));
            endpoints.push(v);
            endpoints.push(t);
        }
    }
    Graph::from_pairs(n, pairs)
}

/// Watts–Strogatz torus: `n * n` vertices on a 2-d ring lattice (both
/// ring families), closed so that every pair within `k_hops` lattice hops
/// (Manhattan distance with wraparound) is adjacent, then each edge is
/// independently rewired with probability `p` to a uniformly random
/// distinct non-adjacent pair. Rewiring preserves the edge count; a
/// rewire whose target search fails 100 times keeps the original edge
/// (logged).
pub fn gen_ws_torus(n: usize, k_hops: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    if k_hops < 1 || n < 2 * k_hops + 1 {
        return Err(Error::InvalidTorus { n, k_hops });
    }
    let nv = n * n;
    let id = |row: usize, col: usize| (row * n + col) as VertexId;

    let mut base: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
    let k = k_hops as isize;
    let m = n as isize;
    for row in 0..n {
        for col in 0..n {
            let a = id(row, col);
            for dr in -k..=k {
                let budget = k - dr.abs();
                for dc in -budget..=budget {
                    if dr == 0 && dc == 0 {
                        continue;
                    }
                    let r2 = (row as isize + dr).rem_euclid(m) as usize;
                    let c2 = (col as isize + dc).rem_euclid(m) as usize;
                    let b = id(r2, c2);
                    if a != b {
                        base.insert((a.min(b), a.max(b)));
                    }
                }
            }
        }
    }

    let mut rng = crate::rng::seeded(seed);
    let coin = Bernoulli::new(p).expect("validated probability");
    let mut adj: Vec<BTreeSet<VertexId>> = vec![BTreeSet::new(); nv];
    for &(a, b) in &base {
        adj[a as usize].insert(b);
        adj[b as usize].insert(a);
    }
    let mut kept_after_retries = 0usize;
    for &(a, b) in &base {
        if !coin.sample(&mut rng) {
            continue;
        }
        adj[a as usize].remove(&b);
        adj[b as usize].remove(&a);
        let mut rewired = false;
        for _ in 0..100 {
            let x = rng.random_range(0..nv as VertexId);
            let y = rng.random_range(0..nv as VertexId);
            if x != y && !adj[x as usize].contains(&y) {
                adj[x as usize].insert(y);
                adj[y as usize].insert(x);
                rewired = true;
                break;
            }
        }
        if !rewired {
            adj[a as usize].insert(b);
            adj[b as usize].insert(a);
            kept_after_retries += 1;
        }
    }
    if kept_after_retries > 0 {
        log::warn!(
            "torus rewiring kept {} edge(s) after exhausting retries",
            kept_after_retries
        );
    }

    let mut pairs = Vec::new();
    for (u, nbrs) in adj.iter().enumerate() {
        for &v in nbrs {
            if (u as VertexId) < v {
                pairs.push((u as VertexId, v));
            }
        }
    }
    Graph::from_pairs(nv, pairs)
}
