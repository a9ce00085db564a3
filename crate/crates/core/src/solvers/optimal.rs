//! Exhaustive optimum: enumerate every size-`k` subset of candidate
//! vertices and keep the one whose removal leaves the lowest ALCC.
//!
//! Subsets are visited in lexicographic order with strict improvement, so
//! ties resolve to the lexicographically smallest set. Graphs whose id
//! space fits in a machine word get a bitset evaluator; the general path
//! uses logical removal with backtracking.

use alloc::vec;
use alloc::vec::Vec;


use crate::error::Error;
use crate::graph::{Graph, VertexId};
use crate::solvers::{apply_sequence, binomial, validate_k, AttackResult, Method};
use crate::timer::{NullStopwatch, Stopwatch};
use crate::Result;

/// Subsets enumerated at most by default; C(35, 7) ≈ 6.7e6 stays well
/// inside, C(60, 10) ≈ 7.5e10 does not.
pub const DEFAULT_ENUMERATION_BUDGET: u128 = 100_000_000;

/// Best removal set of size exactly `k` plus the ALCC it leaves behind.
#[derive(Debug, Clone, PartialEq)]
pub struct OptimalSolution {
    pub set: Vec<VertexId>,
    pub residual_alcc: f64,
}

/// Exhaustive search over all alive vertices with the default budget.
pub fn optimal_exhaustive(g: &Graph, k: usize) -> Result<AttackResult> {
    optimal_exhaustive_with_budget(g, k, DEFAULT_ENUMERATION_BUDGET, &mut NullStopwatch)
}

/// Exhaustive search with an explicit subset budget and step timing.
pub fn optimal_exhaustive_with_budget(
    g: &Graph,
    k: usize,
    budget: u128,
    clock: &mut dyn Stopwatch,
) -> Result<AttackResult> {
    validate_k(g, k)?;
    let candidates: Vec<VertexId> = g.alive_iter().collect();
    let best = optimal_exhaustive_over(g, k, &candidates, budget)?;
    let result = apply_sequence(g, &best.set, Method::Optimal, None, clock)?;
    debug_assert!((result.final_alcc() - best.residual_alcc).abs() < 1e-12);
    Ok(result)
}

/// Core enumeration, restricted to `candidates` (must be alive, duplicates
/// ignored). Exposed separately so hardness-reduction checks can search
/// only the meaningful vertex classes.
pub fn optimal_exhaustive_over(
    g: &Graph,
    k: usize,
    candidates: &[VertexId],
    budget: u128,
) -> Result<OptimalSolution> {
    if k < 1 || k >= g.alive_count() {
        return Err(Error::InvalidK {
            k,
            n: g.alive_count(),
        });
    }
    let mut cands: Vec<VertexId> = candidates.to_vec();
    cands.sort_unstable();
    cands.dedup();
    for &v in &cands {
        if v as usize >= g.n_vertices() {
            return Err(Error::VertexOutOfRange(v));
        }
        if !g.is_alive(v) {
            return Err(Error::VertexDead(v));
        }
    }
    if k > cands.len() {
        return Err(Error::InvalidK {
            k,
            n: cands.len() + 1,
        });
    }
    let combinations = binomial(cands.len(), k).unwrap_or(u128::MAX);
    if combinations > budget {
        return Err(Error::EnumerationBudget {
            n: cands.len(),
            k,
            combinations,
            budget,
        });
    }
    if g.n_vertices() <= 64 {
        Ok(enumerate_bitset(g, k, &cands))
    } else {
        enumerate_general(g, k, &cands)
    }
}

/// Word-sized graphs: adjacency as bit masks, ALCC of a survivor mask via
/// popcounts. Same term order as the general ALCC computation, so values
/// agree bit for bit.
fn enumerate_bitset(g: &Graph, k: usize, cands: &[VertexId]) -> OptimalSolution {
    let n = g.n_vertices();
    let mut adj = vec![0u64; n];
    let mut alive_mask = 0u64;
    for u in g.alive_iter() {
        alive_mask |= 1 << u;
        for v in g.alive_neighbors(u) {
            adj[u as usize] |= 1 << v;
        }
    }
    let survivors = g.alive_count() - k;

    let mut chosen = vec![0 as VertexId; k];
    let mut best_set: Vec<VertexId> = Vec::new();
    let mut best = f64::INFINITY;

    // Lexicographic DFS over candidate indices.
    struct Dfs<'a> {
        adj: &'a [u64],
        cands: &'a [VertexId],
        k: usize,
        survivors: usize,
        chosen: &'a mut [VertexId],
        best: &'a mut f64,
        best_set: &'a mut Vec<VertexId>,
    }
    fn recurse(d: &mut Dfs<'_>, start: usize, depth: usize, mask: u64) {
        if depth == d.k {
            let value = alcc_bits(d.adj, mask, d.survivors);
            if value < *d.best {
                *d.best = value;
                d.best_set.clear();
                d.best_set.extend_from_slice(d.chosen);
            }
            return;
        }
        let remaining = d.k - depth;
        for i in start..=d.cands.len() - remaining {
            let v = d.cands[i];
            d.chosen[depth] = v;
            recurse(d, i + 1, depth + 1, mask & !(1u64 << v));
        }
    }
    let mut dfs = Dfs {
        adj: &adj,
        cands,
        k,
        survivors,
        chosen: &mut chosen,
        best: &mut best,
        best_set: &mut best_set,
    };
    recurse(&mut dfs, 0, 0, alive_mask);
    OptimalSolution {
        set: best_set,
        residual_alcc: best,
    }
}

fn alcc_bits(adj: &[u64], alive: u64, n_alive: usize) -> f64 {
    let mut sum = 0.0;
    let mut rest = alive;
    while rest != 0 {
        let u = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let nb = adj[u] & alive;
        let d = nb.count_ones() as u64;
        if d > 1 {
            let mut twice_t = 0u64;
            let mut nbs = nb;
            while nbs != 0 {
                let v = nbs.trailing_zeros() as usize;
                nbs &= nbs - 1;
                twice_t += (nb & adj[v]).count_ones() as u64;
            }
            sum += twice_t as f64 / (d * (d - 1)) as f64;
        }
    }
    sum / n_alive as f64
}

fn enumerate_general(g: &Graph, k: usize, cands: &[VertexId]) -> Result<OptimalSolution> {
    let mut h = g.clone();
    let mut chosen = vec![0 as VertexId; k];
    let mut best_set = Vec::new();
    let mut best = f64::INFINITY;
    recurse_general(&mut h, cands, k, 0, 0, &mut chosen, &mut best, &mut best_set)?;
    Ok(OptimalSolution {
        set: best_set,
        residual_alcc: best,
    })
}

#[allow(clippy::too_many_arguments)]
fn recurse_general(
    h: &mut Graph,
    cands: &[VertexId],
    k: usize,
    start: usize,
    depth: usize,
    chosen: &mut [VertexId],
    best: &mut f64,
    best_set: &mut Vec<VertexId>,
) -> Result<()> {
    if depth == k {
        let value = alcc_direct(h);
        if value < *best {
            *best = value;
            best_set.clear();
            best_set.extend_from_slice(chosen);
        }
        return Ok(());
    }
    let remaining = k - depth;
    for i in start..=cands.len() - remaining {
        let v = cands[i];
        chosen[depth] = v;
        h.remove_vertex(v)?;
        recurse_general(h, cands, k, i + 1, depth + 1, chosen, best, best_set)?;
        h.restore_vertex(v)?;
    }
    Ok(())
}

/// ALCC by direct neighbor intersection, no index allocation; used at
/// enumeration leaves.
fn alcc_direct(g: &Graph) -> f64 {
    let mut sum = 0.0;
    for u in g.alive_iter() {
        sum += crate::clustering::local_cc_unchecked(g, u);
    }
    sum / g.alive_count() as f64
}
