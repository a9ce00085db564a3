//! Attack solvers: given a graph and a removal budget `k`, pick the
//! vertices whose removal degrades the average clustering coefficient
//! the most.
//!
//! Every solver returns an [`AttackResult`] with the ordered removal
//! sequence and the full ALCC / max-LCC trajectory, and is deterministic:
//! the same inputs (and seed, where one applies) produce a bit-identical
//! result. All score ties break toward the smallest vertex id.

mod baselines;
mod faga;
mod greedy;
mod ip;
mod optimal;

pub use baselines::{
    baseline_betweenness, baseline_lcc_greedy, baseline_max_degree, baseline_random,
    brandes_betweenness,
};
pub use faga::{faga, faga_delta, faga_timed};
pub use greedy::{simple_greedy, simple_greedy_timed};
pub use ip::emit_cubic_ip;
pub use optimal::{
    optimal_exhaustive, optimal_exhaustive_over, optimal_exhaustive_with_budget, OptimalSolution,
    DEFAULT_ENUMERATION_BUDGET,
};

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::clustering::{alcc_from_index, max_lcc_from_index, TriangleIndex};
use crate::error::Error;
use crate::graph::{Graph, VertexId};
use crate::timer::Stopwatch;
use crate::Result;

/// Which incremental score the adaptive greedy optimizes.
///
/// `Paper` is the published update formula, which treats the contribution
/// of non-neighbors as unchanged even though the averaging denominator
/// shrinks from N to N-1. `Exact` subtracts that renormalization term, so
/// the score equals the true ALCC drop and the greedy trajectory is
/// guaranteed non-increasing. `Exact` is the default everywhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeltaMode {
    Paper,
    Exact,
}

impl Default for DeltaMode {
    fn default() -> Self {
        DeltaMode::Exact
    }
}

impl fmt::Display for DeltaMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeltaMode::Paper => write!(f, "paper"),
            DeltaMode::Exact => write!(f, "exact"),
        }
    }
}

impl FromStr for DeltaMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" => Ok(DeltaMode::Paper),
            "exact" => Ok(DeltaMode::Exact),
            _ => Err(Error::MalformedToken {
                line: 0,
                token: s.into(),
            }),
        }
    }
}

/// Solver tags, used as the `method` column of experiment output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Faga,
    SimpleGreedy,
    Optimal,
    RandomFail,
    MaxDegree,
    LccGreedy,
    Betweenness,
}

impl Method {
    pub const ALL: [Method; 7] = [
        Method::Faga,
        Method::SimpleGreedy,
        Method::Optimal,
        Method::RandomFail,
        Method::MaxDegree,
        Method::LccGreedy,
        Method::Betweenness,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Faga => "faga",
            Method::SimpleGreedy => "simple_greedy",
            Method::Optimal => "optimal",
            Method::RandomFail => "random_fail",
            Method::MaxDegree => "max_degree",
            Method::LccGreedy => "lcc_greedy",
            Method::Betweenness => "betweenness",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "faga" | "fast_greedy" => Ok(Method::Faga),
            "greedy" | "simple_greedy" => Ok(Method::SimpleGreedy),
            "optimal" => Ok(Method::Optimal),
            "random" | "random_fail" => Ok(Method::RandomFail),
            "max_degree" | "max-degree" | "degree" => Ok(Method::MaxDegree),
            "lcc" | "lcc_greedy" => Ok(Method::LccGreedy),
            "betweenness" => Ok(Method::Betweenness),
            _ => Err(Error::MalformedToken {
                line: 0,
                token: s.into(),
            }),
        }
    }
}

/// Outcome of one solver run.
///
/// `alcc_trajectory[i]` (and `max_lcc_trajectory[i]`) is the metric after
/// removing the first `i` vertices of `removed`, so index 0 holds the
/// initial value and the vectors have length `removed.len() + 1`.
/// `elapsed_ms[i]` is the wall time of step `i + 1`; solvers that score
/// all candidates up front account for that work in their first step.
/// Times are zero unless the caller supplies a real [`Stopwatch`].
#[derive(Debug, Clone, PartialEq)]
pub struct AttackResult {
    pub method: Method,
    pub seed: Option<u64>,
    pub removed: Vec<VertexId>,
    pub alcc_trajectory: Vec<f64>,
    pub max_lcc_trajectory: Vec<f64>,
    pub elapsed_ms: Vec<f64>,
}

impl AttackResult {
    /// ALCC of the residual graph after the full removal sequence.
    pub fn final_alcc(&self) -> f64 {
        *self.alcc_trajectory.last().expect("trajectory never empty")
    }
}

pub(crate) fn validate_k(g: &Graph, k: usize) -> Result<()> {
    let n = g.alive_count();
    if k < 1 || k >= n {
        return Err(Error::InvalidK { k, n });
    }
    Ok(())
}

/// Removes `order` one vertex at a time from a copy of `g`, recording the
/// metric trajectory. Shared by every solver that decides its sequence up
/// front.
pub(crate) fn apply_sequence(
    g: &Graph,
    order: &[VertexId],
    method: Method,
    seed: Option<u64>,
    clock: &mut dyn Stopwatch,
) -> Result<AttackResult> {
    let mut h = g.clone();
    let idx = TriangleIndex::build(&h);
    let mut alcc_trajectory = Vec::with_capacity(order.len() + 1);
    let mut max_lcc_trajectory = Vec::with_capacity(order.len() + 1);
    let mut elapsed_ms = Vec::with_capacity(order.len());
    alcc_trajectory.push(alcc_from_index(&h, &idx));
    max_lcc_trajectory.push(max_lcc_from_index(&h, &idx));
    for &u in order {
        h.remove_vertex(u)?;
        let idx = TriangleIndex::build(&h);
        alcc_trajectory.push(alcc_from_index(&h, &idx));
        max_lcc_trajectory.push(max_lcc_from_index(&h, &idx));
        elapsed_ms.push(clock.lap_ms());
    }
    Ok(AttackResult {
        method,
        seed,
        removed: order.to_vec(),
        alcc_trajectory,
        max_lcc_trajectory,
        elapsed_ms,
    })
}

/// Runs `k` rounds of pick-remove-record, where `pick` chooses among the
/// alive vertices of the current residual graph.
pub(crate) fn adaptive_attack(
    g: &Graph,
    k: usize,
    method: Method,
    clock: &mut dyn Stopwatch,
    mut pick: impl FnMut(&Graph) -> VertexId,
) -> Result<AttackResult> {
    validate_k(g, k)?;
    let mut h = g.clone();
    let idx = TriangleIndex::build(&h);
    let mut removed = Vec::with_capacity(k);
    let mut alcc_trajectory = Vec::with_capacity(k + 1);
    let mut max_lcc_trajectory = Vec::with_capacity(k + 1);
    let mut elapsed_ms = Vec::with_capacity(k);
    alcc_trajectory.push(alcc_from_index(&h, &idx));
    max_lcc_trajectory.push(max_lcc_from_index(&h, &idx));
    clock.lap_ms();
    for _ in 0..k {
        let u = pick(&h);
        h.remove_vertex(u)?;
        removed.push(u);
        let idx = TriangleIndex::build(&h);
        alcc_trajectory.push(alcc_from_index(&h, &idx));
        max_lcc_trajectory.push(max_lcc_from_index(&h, &idx));
        elapsed_ms.push(clock.lap_ms());
    }
    Ok(AttackResult {
        method,
        seed: None,
        removed,
        alcc_trajectory,
        max_lcc_trajectory,
        elapsed_ms,
    })
}

/// Picks the alive vertex with the strictly largest score; ties keep the
/// smallest id. Scores must be finite.
pub(crate) fn argmax_alive(g: &Graph, mut score: impl FnMut(VertexId) -> f64) -> VertexId {
    let mut best: Option<(f64, VertexId)> = None;
    for u in g.alive_iter() {
        let s = score(u);
        match best {
            Some((bs, _)) if s <= bs => {}
            _ => best = Some((s, u)),
        }
    }
    best.expect("graph has alive vertices").1
}

pub(crate) fn binomial(n: usize, k: usize) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)?;
        acc /= (i + 1) as u128;
    }
    Some(acc)
}

/// Dispatches a method tag to its solver; the entry point used by batch
/// experiment drivers.
pub fn run_method(
    g: &Graph,
    method: Method,
    k: usize,
    mode: DeltaMode,
    seed: u64,
    clock: &mut dyn Stopwatch,
) -> Result<AttackResult> {
    match method {
        Method::Faga => faga_timed(g, k, mode, clock),
        Method::SimpleGreedy => simple_greedy_timed(g, k, clock),
        Method::Optimal => optimal_exhaustive_with_budget(g, k, DEFAULT_ENUMERATION_BUDGET, clock),
        Method::RandomFail => baseline_random(g, k, seed, clock),
        Method::MaxDegree => baseline_max_degree(g, k, clock),
        Method::LccGreedy => baseline_lcc_greedy(g, k, clock),
        Method::Betweenness => baseline_betweenness(g, k, clock),
    }
}
