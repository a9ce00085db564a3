//! Monte-Carlo influence propagation under the independent cascade (IC)
//! and linear threshold (LT) models.
//!
//! Trials are driven by per-trial ChaCha substreams of the master seed
//! (stream id = trial index + 1), so estimates are reproducible and
//! trials are independent — they could run in any order or concurrently
//! without changing the result.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::graph::{Graph, VertexId};
use crate::Result;

/// Propagation model tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpreadModel {
    Ic,
    Lt,
}

impl core::fmt::Display for SpreadModel {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SpreadModel::Ic => write!(f, "ic"),
            SpreadModel::Lt => write!(f, "lt"),
        }
    }
}

/// Monte-Carlo estimate of the expected final active-set size.
#[derive(Debug, Clone, PartialEq)]
pub struct SpreadEstimate {
    pub mean_activations: f64,
    pub trials: u64,
    pub seed: u64,
    pub model: SpreadModel,
}

/// Independent cascade with uniform edge probability: every newly active
/// vertex gets one chance to activate each currently inactive neighbor.
/// Each edge is flipped at most once per trial.
pub fn ic_spread(
    g: &Graph,
    seeds: &[VertexId],
    edge_prob: f64,
    trials: u64,
    seed: u64,
) -> Result<SpreadEstimate> {
    let seeds = checked_seed_set(g, seeds)?;
    check_probability(edge_prob)?;
    let mut total = 0u64;
    for trial in 0..trials.max(1) {
        let mut rng = crate::rng::trial_stream(seed, trial);
        total += ic_trial(g, &seeds, edge_prob, &mut rng).len() as u64;
    }
    Ok(SpreadEstimate {
        mean_activations: total as f64 / trials.max(1) as f64,
        trials: trials.max(1),
        seed,
        model: SpreadModel::Ic,
    })
}

/// Per-vertex empirical activation frequency under IC; used to compare
/// against the shared-neighbor activation bound.
pub fn ic_activation_frequency(
    g: &Graph,
    seeds: &[VertexId],
    edge_prob: f64,
    trials: u64,
    seed: u64,
) -> Result<Vec<f64>> {
    let seeds = checked_seed_set(g, seeds)?;
    check_probability(edge_prob)?;
    let trials = trials.max(1);
    let mut hits = vec![0u64; g.n_vertices()];
    for trial in 0..trials {
        let mut rng = crate::rng::trial_stream(seed, trial);
        for v in ic_trial(g, &seeds, edge_prob, &mut rng) {
            hits[v as usize] += 1;
        }
    }
    Ok(hits.into_iter().map(|h| h as f64 / trials as f64).collect())
}

/// IC where each trial re-draws a single uniformly random alive seed
/// vertex; matches protocols that average over seed placement.
pub fn ic_spread_random_seed(
    g: &Graph,
    edge_prob: f64,
    trials: u64,
    seed: u64,
) -> Result<SpreadEstimate> {
    check_probability(edge_prob)?;
    if g.alive_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let alive: Vec<VertexId> = g.alive_iter().collect();
    let trials = trials.max(1);
    let mut total = 0u64;
    for trial in 0..trials {
        let mut rng = crate::rng::trial_stream(seed, trial);
        let s = alive[rng.random_range(0..alive.len())];
        let seeds = BTreeSet::from([s]);
        total += ic_trial(g, &seeds, edge_prob, &mut rng).len() as u64;
    }
    Ok(SpreadEstimate {
        mean_activations: total as f64 / trials as f64,
        trials,
        seed,
        model: SpreadModel::Ic,
    })
}

fn ic_trial(
    g: &Graph,
    seeds: &BTreeSet<VertexId>,
    edge_prob: f64,
    rng: &mut ChaCha8Rng,
) -> Vec<VertexId> {
    let mut active = vec![false; g.n_vertices()];
    let mut reached: Vec<VertexId> = Vec::new();
    let mut frontier: VecDeque<VertexId> = VecDeque::new();
    for &s in seeds {
        active[s as usize] = true;
        reached.push(s);
        frontier.push_back(s);
    }
    while let Some(u) = frontier.pop_front() {
        for v in g.alive_neighbors(u) {
            if !active[v as usize] && rng.random_bool(edge_prob) {
                active[v as usize] = true;
                reached.push(v);
                frontier.push_back(v);
            }
        }
    }
    reached
}

/// Linear threshold with uniform weights: edge into `v` weighs
/// `1 / d(v)`, thresholds are drawn uniformly from [0, 1] per trial, and
/// `v` activates as soon as the active fraction of its neighbors reaches
/// its threshold (ties activate, so a weight-1 neighbor always fires).
pub fn lt_spread(g: &Graph, seeds: &[VertexId], trials: u64, seed: u64) -> Result<SpreadEstimate> {
    let seeds = checked_seed_set(g, seeds)?;
    let trials = trials.max(1);
    let mut total = 0u64;
    for trial in 0..trials {
        let mut rng = crate::rng::trial_stream(seed, trial);
        total += lt_trial(g, &seeds, &mut rng);
    }
    Ok(SpreadEstimate {
        mean_activations: total as f64 / trials as f64,
        trials,
        seed,
        model: SpreadModel::Lt,
    })
}

/// LT with a single uniformly random seed per trial.
pub fn lt_spread_random_seed(g: &Graph, trials: u64, seed: u64) -> Result<SpreadEstimate> {
    if g.alive_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let alive: Vec<VertexId> = g.alive_iter().collect();
    let trials = trials.max(1);
    let mut total = 0u64;
    for trial in 0..trials {
        let mut rng = crate::rng::trial_stream(seed, trial);
        let s = alive[rng.random_range(0..alive.len())];
        total += lt_trial(g, &BTreeSet::from([s]), &mut rng);
    }
    Ok(SpreadEstimate {
        mean_activations: total as f64 / trials as f64,
        trials,
        seed,
        model: SpreadModel::Lt,
    })
}

fn lt_trial(g: &Graph, seeds: &BTreeSet<VertexId>, rng: &mut ChaCha8Rng) -> u64 {
    // thresholds drawn in ascending vertex order for reproducibility
    let mut threshold = vec![0.0f64; g.n_vertices()];
    for u in g.alive_iter() {
        threshold[u as usize] = rng.random::<f64>();
    }
    let mut active = vec![false; g.n_vertices()];
    let mut active_neighbors = vec![0u32; g.n_vertices()];
    let mut frontier: VecDeque<VertexId> = VecDeque::new();
    let mut count = 0u64;
    for &s in seeds {
        active[s as usize] = true;
        count += 1;
        frontier.push_back(s);
    }
    while let Some(u) = frontier.pop_front() {
        for v in g.alive_neighbors(u) {
            active_neighbors[v as usize] += 1;
            if !active[v as usize] {
                let influence = active_neighbors[v as usize] as f64 / g.degree(v) as f64;
                if influence >= threshold[v as usize] {
                    active[v as usize] = true;
                    count += 1;
                    frontier.push_back(v);
                }
            }
        }
    }
    count
}

/// Lower bound on the probability that an activated vertex `s` activates
/// an adjacent `t` sharing `k_shared` neighbors, under IC with edge
/// probability 1/2: `1 - (1/2) (3/4)^k`.
pub fn activation_bound(k_shared: u32) -> f64 {
    let mut attenuation = 1.0f64;
    for _ in 0..k_shared {
        attenuation *= 0.75;
    }
    1.0 - 0.5 * attenuation
}

fn checked_seed_set(g: &Graph, seeds: &[VertexId]) -> Result<BTreeSet<VertexId>> {
    if seeds.is_empty() {
        return Err(Error::EmptySeedSet);
    }
    let mut out = BTreeSet::new();
    for &s in seeds {
        if s as usize >= g.n_vertices() {
            return Err(Error::VertexOutOfRange(s));
        }
        if !g.is_alive(s) {
            return Err(Error::VertexDead(s));
        }
        out.insert(s);
    }
    Ok(out)
}

fn check_probability(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    Ok(())
}
