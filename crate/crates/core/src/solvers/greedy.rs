//! Non-adaptive greedy: score every vertex once by the ALCC of the graph
//! without it, then remove the `k` lowest-scoring vertices at once.

use alloc::vec::Vec;

use crate::clustering::alcc_without;
use crate::graph::{Graph, VertexId};
use crate::solvers::{apply_sequence, validate_k, AttackResult, Method};
use crate::timer::{NullStopwatch, Stopwatch};
use crate::Result;

/// Scores each alive vertex by full recomputation (N ALCC evaluations,
/// O(N M^{3/2}) total) and removes the `k` vertices with the lowest
/// residual ALCC simultaneously. The reported trajectory applies the
/// simultaneous removals in ascending score order (ties toward the
/// smallest id) so a step-by-step curve is still available.
pub fn simple_greedy(g: &Graph, k: usize) -> Result<AttackResult> {
    simple_greedy_timed(g, k, &mut NullStopwatch)
}

/// [`simple_greedy`] with per-step wall timing; the up-front scoring pass
/// is folded into the first step's time.
pub fn simple_greedy_timed(g: &Graph, k: usize, clock: &mut dyn Stopwatch) -> Result<AttackResult> {
    validate_k(g, k)?;
    clock.lap_ms();
    let mut scored: Vec<(f64, VertexId)> = g
        .alive_iter()
        .map(|u| alcc_without(g, u).map(|c| (c, u)))
        .collect::<Result<_>>()?;
    scored.sort_unstable_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    let order: Vec<VertexId> = scored.iter().take(k).map(|&(_, u)| u).collect();
    apply_sequence(g, &order, Method::SimpleGreedy, None, clock)
}
