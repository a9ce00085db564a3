//! Local and average clustering coefficients and triangle indexing.
//!
//! `C(u) = 2 T(u) / (d_u (d_u - 1))` for `d_u > 1` and 0 otherwise, where
//! `T(u)` is the number of triangles containing `u`; the graph-level
//! measure (ALCC) averages `C(u)` over all alive vertices, so isolated
//! and degree-1 vertices contribute 0 but stay in the denominator.
//!
//! All counts are exact integers; only the final divisions round, so
//! every value here is reproducible bit for bit.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::{Graph, VertexId};
use crate::Result;

/// Per-vertex triangle counts `T(u)` and per-edge triangle counts
/// `tr(u,v)`, tied to the graph they were built from.
///
/// Built by a degree-ordered forward listing in O(M^{3/2}); kept current
/// under vertex removal by the adaptive greedy solver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleIndex {
    t_node: Vec<u64>,
    // Keyed by arc position in the graph's flat neighbor array; both
    // orientations of an edge carry the same count.
    t_edge: Vec<u64>,
}

impl TriangleIndex {
    /// Counts all triangles of the alive residual graph.
    ///
    /// Vertices are numbered so that a smaller number means a smaller
    /// alive degree, and every triangle `{a, b, c}` is listed exactly
    /// once, at its middle vertex in that numbering.
    pub fn build(g: &Graph) -> Self {
        let n = g.n_vertices();
        let mut t_node = vec![0u64; n];
        let mut t_edge = vec![0u64; g.arc_count()];

        let mut order: Vec<VertexId> = g.alive_iter().collect();
        order.sort_unstable_by_key(|&u| (g.degree(u), u));
        let mut rank = vec![u32::MAX; n];
        for (i, &u) in order.iter().enumerate() {
            rank[u as usize] = i as u32;
        }

        // A[v] accumulates already-processed (higher-rank) neighbors of v,
        // in descending rank order.
        let mut acc: Vec<Vec<VertexId>> = vec![Vec::new(); n];
        let mut common: Vec<VertexId> = Vec::new();
        for &u in order.iter().rev() {
            for v in g.alive_neighbors(u) {
                if rank[v as usize] >= rank[u as usize] {
                    continue;
                }
                common.clear();
                intersect_by_rank(&acc[u as usize], &acc[v as usize], &rank, &mut common);
                for &w in &common {
                    t_node[u as usize] += 1;
                    t_node[v as usize] += 1;
                    t_node[w as usize] += 1;
                    bump_edge(g, &mut t_edge, u, v);
                    bump_edge(g, &mut t_edge, v, w);
                    bump_edge(g, &mut t_edge, u, w);
                }
                acc[v as usize].push(u);
            }
        }
        Self { t_node, t_edge }
    }

    /// `T(u)`: triangles containing `u`. Zero for dead vertices.
    pub fn node_triangles(&self, u: VertexId) -> u64 {
        self.t_node[u as usize]
    }

    /// `tr(u,v)`: triangles containing both endpoints. Zero if `(u,v)` is
    /// not an alive edge of `g`.
    pub fn edge_triangles(&self, g: &Graph, u: VertexId, v: VertexId) -> u64 {
        if !g.has_edge(u, v) {
            return 0;
        }
        g.arc_index(u, v).map_or(0, |i| self.t_edge[i])
    }

    /// Total number of triangles in the alive graph.
    pub fn total_triangles(&self) -> u64 {
        self.t_node.iter().sum::<u64>() / 3
    }

    /// Shallow compatibility check between an index and a graph.
    pub fn matches(&self, g: &Graph) -> bool {
        self.t_node.len() == g.n_vertices() && self.t_edge.len() == g.arc_count()
    }

    /// Retires `u` from the index: every surviving edge `(v, w)` between
    /// alive neighbors of `u` loses the triangle `{u, v, w}`, and all of
    /// `u`'s own entries are zeroed. Call immediately *before*
    /// `g.remove_vertex(u)`; afterwards the index equals a fresh
    /// [`TriangleIndex::build`] of the residual graph. O(sum of neighbor
    /// degrees).
    pub fn retire_vertex(&mut self, g: &Graph, u: VertexId) {
        let nbrs: Vec<VertexId> = g.alive_neighbors(u).collect();
        for (i, &v) in nbrs.iter().enumerate() {
            let rest = &nbrs[i + 1..];
            if rest.is_empty() {
                break;
            }
            // both sides sorted ascending: g's neighbor slices and `rest`
            let mut it = g.alive_neighbors(v).peekable();
            for &w in rest {
                while let Some(&x) = it.peek() {
                    if x < w {
                        it.next();
                    } else {
                        break;
                    }
                }
                if it.peek() == Some(&w) {
                    self.t_node[v as usize] -= 1;
                    self.t_node[w as usize] -= 1;
                    drop_edge(g, &mut self.t_edge, v, w);
                }
            }
        }
        self.t_node[u as usize] = 0;
        for &v in g.neighbor_slice(u) {
            if let Some(i) = g.arc_index(u, v) {
                self.t_edge[i] = 0;
            }
            if let Some(i) = g.arc_index(v, u) {
                self.t_edge[i] = 0;
            }
        }
    }
}

fn bump_edge(g: &Graph, t_edge: &mut [u64], a: VertexId, b: VertexId) {
    t_edge[g.arc_index(a, b).expect("edge exists")] += 1;
    t_edge[g.arc_index(b, a).expect("edge exists")] += 1;
}

fn drop_edge(g: &Graph, t_edge: &mut [u64], a: VertexId, b: VertexId) {
    t_edge[g.arc_index(a, b).expect("edge exists")] -= 1;
    t_edge[g.arc_index(b, a).expect("edge exists")] -= 1;
}

/// Intersects two descending-rank accumulator lists.
fn intersect_by_rank(a: &[VertexId], b: &[VertexId], rank: &[u32], out: &mut Vec<VertexId>) {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let ra = rank[a[i] as usize];
        let rb = rank[b[j] as usize];
        if ra == rb {
            out.push(a[i]);
            i += 1;
            j += 1;
        } else if ra > rb {
            i += 1;
        } else {
            j += 1;
        }
    }
}

/// Local clustering coefficient of `u`: the fraction of connected pairs
/// among `u`'s alive neighbors, 0 when the degree is below 2.
pub fn local_cc(g: &Graph, u: VertexId) -> Result<f64> {
    if u as usize >= g.n_vertices() {
        return Err(Error::VertexOutOfRange(u));
    }
    if !g.is_alive(u) {
        return Err(Error::VertexDead(u));
    }
    Ok(local_cc_unchecked(g, u))
}

pub(crate) fn local_cc_unchecked(g: &Graph, u: VertexId) -> f64 {
    let d = g.degree(u) as u64;
    if d < 2 {
        return 0.0;
    }
    // sum of |N(u) ∩ N(v)| over alive neighbors v counts 2 T(u)
    let mut twice_t = 0u64;
    for v in g.alive_neighbors(u) {
        twice_t += alive_intersection_size(g, u, v);
    }
    twice_t as f64 / (d * (d - 1)) as f64
}

fn alive_intersection_size(g: &Graph, a: VertexId, b: VertexId) -> u64 {
    let (sa, sb) = (g.neighbor_slice(a), g.neighbor_slice(b));
    let (mut i, mut j) = (0, 0);
    let mut count = 0u64;
    while i < sa.len() && j < sb.len() {
        if sa[i] == sb[j] {
            if g.is_alive(sa[i]) {
                count += 1;
            }
            i += 1;
            j += 1;
        } else if sa[i] < sb[j] {
            i += 1;
        } else {
            j += 1;
        }
    }
    count
}

/// Average local clustering coefficient over all alive vertices.
pub fn alcc(g: &Graph) -> Result<f64> {
    if g.alive_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let idx = TriangleIndex::build(g);
    Ok(alcc_from_index(g, &idx))
}

/// ALCC computed from a prebuilt (consistent) index.
pub(crate) fn alcc_from_index(g: &Graph, idx: &TriangleIndex) -> f64 {
    let mut sum = 0.0;
    for u in g.alive_iter() {
        sum += lcc_from_index(g, idx, u);
    }
    sum / g.alive_count() as f64
}

pub(crate) fn lcc_from_index(g: &Graph, idx: &TriangleIndex, u: VertexId) -> f64 {
    let d = g.degree(u) as u64;
    if d < 2 {
        return 0.0;
    }
    (2 * idx.node_triangles(u)) as f64 / (d * (d - 1)) as f64
}

/// Maximum local clustering coefficient over alive vertices.
pub fn max_lcc(g: &Graph) -> Result<f64> {
    if g.alive_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let idx = TriangleIndex::build(g);
    Ok(max_lcc_from_index(g, &idx))
}

pub(crate) fn max_lcc_from_index(g: &Graph, idx: &TriangleIndex) -> f64 {
    let mut best = 0.0f64;
    for u in g.alive_iter() {
        let c = lcc_from_index(g, idx, u);
        if c > best {
            best = c;
        }
    }
    best
}

/// True iff the alive graph contains no triangle; equivalent to ALCC = 0
/// on non-empty graphs.
pub fn is_triangle_free(g: &Graph) -> bool {
    TriangleIndex::build(g).total_triangles() == 0
}

/// ALCC after removing `u`, by full recomputation on the residual graph.
/// Reference oracle for the adaptive solver's incremental scores.
pub fn alcc_without(g: &Graph, u: VertexId) -> Result<f64> {
    if u as usize >= g.n_vertices() {
        return Err(Error::VertexOutOfRange(u));
    }
    if !g.is_alive(u) {
        return Err(Error::VertexDead(u));
    }
    if g.alive_count() < 2 {
        return Err(Error::TooFewVertices {
            needed: 2,
            alive: g.alive_count(),
        });
    }
    let mut h = g.clone();
    h.remove_vertex(u)?;
    alcc(&h)
}
