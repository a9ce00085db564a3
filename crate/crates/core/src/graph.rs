//! Undirected simple graphs in compressed sparse row form.
//!
//! Vertex ids are dense integers `0..n_vertices()` and never change:
//! removal is logical (a liveness mask plus maintained alive degrees), so
//! solvers can report original ids after any number of removals and can
//! cheaply undo a removal with [`Graph::restore_vertex`].

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write as _;

use crate::error::Error;
use crate::Result;

/// Dense vertex identifier, stable across removals.
pub type VertexId = u32;

/// Immutable undirected simple graph with logical vertex removal.
///
/// Adjacency is stored once in CSR form (`offsets` + sorted `neighbors`);
/// the `alive` mask and per-vertex alive degrees track the current
/// residual graph. Neighbor slices always list the original neighbors;
/// callers that need the residual view filter through [`Graph::is_alive`]
/// or use [`Graph::alive_neighbors`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<VertexId>,
    alive: Vec<bool>,
    degree: Vec<u32>,
    alive_vertices: usize,
    alive_edges: usize,
    dropped_self_loops: usize,
    dropped_duplicates: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices from an arbitrary list of pairs.
    /// Self-loops are dropped and duplicates (in either orientation)
    /// collapsed; both are counted and reported via
    /// [`Graph::self_loops_dropped`] / [`Graph::duplicate_edges_dropped`].
    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (VertexId, VertexId)>) -> Result<Self> {
        let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
        let mut self_loops = 0usize;
        for (a, b) in pairs {
            if a as usize >= n {
                return Err(Error::VertexOutOfRange(a));
            }
            if b as usize >= n {
                return Err(Error::VertexOutOfRange(b));
            }
            if a == b {
                self_loops += 1;
            } else {
                edges.push((a.min(b), a.max(b)));
            }
        }
        edges.sort_unstable();
        let raw = edges.len();
        edges.dedup();
        let duplicates = raw - edges.len();

        let mut degree = vec![0u32; n];
        for &(u, v) in &edges {
            degree[u as usize] += 1;
            degree[v as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0usize);
        for u in 0..n {
            offsets.push(offsets[u] + degree[u] as usize);
        }
        let mut neighbors = vec![0 as VertexId; 2 * edges.len()];
        let mut cursor: Vec<usize> = offsets[..n].to_vec();
        // Scattering edges in sorted (u, v) order leaves every neighbor
        // slice sorted: a vertex first receives its smaller neighbors
        // (ascending), then its larger ones (ascending).
        for &(u, v) in &edges {
            neighbors[cursor[u as usize]] = v;
            cursor[u as usize] += 1;
            neighbors[cursor[v as usize]] = u;
            cursor[v as usize] += 1;
        }
        Ok(Self {
            offsets,
            neighbors,
            alive: vec![true; n],
            degree,
            alive_vertices: n,
            alive_edges: edges.len(),
            dropped_self_loops: self_loops,
            dropped_duplicates: duplicates,
        })
    }

    /// Parses whitespace-separated `u v` pairs, one edge per line.
    /// Lines starting with `#` are comments; blank lines are ignored.
    /// The vertex count is `max id + 1`.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut pairs: Vec<(VertexId, VertexId)> = Vec::new();
        let mut max_id: i64 = -1;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let mut ids = [0 as VertexId; 2];
            let mut count = 0usize;
            for token in trimmed.split_whitespace() {
                if count == 2 {
                    return Err(Error::BadEdgeLine { line });
                }
                let id: i64 = token.parse().map_err(|_| Error::MalformedToken {
                    line,
                    token: token.to_string(),
                })?;
                if id < 0 {
                    return Err(Error::NegativeId { line, id });
                }
                if id > u32::MAX as i64 {
                    return Err(Error::MalformedToken {
                        line,
                        token: token.to_string(),
                    });
                }
                ids[count] = id as VertexId;
                count += 1;
                max_id = max_id.max(id);
            }
            if count != 2 {
                return Err(Error::BadEdgeLine { line });
            }
            pairs.push((ids[0], ids[1]));
        }
        Self::from_pairs((max_id + 1) as usize, pairs)
    }

    /// Serializes the alive part of the graph as an edge list, one
    /// `u v` line per edge with `u < v`, in ascending order. Round-trips
    /// with [`Graph::parse_edge_list`] up to dead vertices at the tail of
    /// the id range (those cannot be represented by edges).
    pub fn write_edge_list(&self) -> String {
        let mut out = String::new();
        for u in self.alive_iter() {
            for &v in self.neighbor_slice(u) {
                if v > u && self.alive[v as usize] {
                    let _ = writeln!(out, "{} {}", u, v);
                }
            }
        }
        out
    }

    /// Total number of vertex ids, dead or alive.
    pub fn n_vertices(&self) -> usize {
        self.alive.len()
    }

    /// Number of alive vertices (the `N` of the residual graph).
    pub fn alive_count(&self) -> usize {
        self.alive_vertices
    }

    /// Number of edges between alive vertices (the `M` of the residual graph).
    pub fn edge_count(&self) -> usize {
        self.alive_edges
    }

    pub fn is_alive(&self, u: VertexId) -> bool {
        (u as usize) < self.alive.len() && self.alive[u as usize]
    }

    /// Alive degree of `u`; 0 for dead vertices.
    pub fn degree(&self, u: VertexId) -> u32 {
        self.degree[u as usize]
    }

    /// The full (construction-time) neighbor slice of `u`, sorted
    /// ascending. May contain dead vertices.
    pub fn neighbor_slice(&self, u: VertexId) -> &[VertexId] {
        &self.neighbors[self.offsets[u as usize]..self.offsets[u as usize + 1]]
    }

    /// Alive neighbors of `u`, ascending.
    pub fn alive_neighbors(&self, u: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.neighbor_slice(u)
            .iter()
            .copied()
            .filter(move |&v| self.alive[v as usize])
    }

    /// True iff `u` and `v` are alive and adjacent.
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.is_alive(u) && self.is_alive(v) && self.neighbor_slice(u).binary_search(&v).is_ok()
    }

    /// All vertex ids, dead or alive.
    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> {
        (0..self.alive.len() as u32).into_iter()
    }

    /// Alive vertex ids, ascending.
    pub fn alive_iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.alive.len() as u32).filter(move |&u| self.alive[u as usize])
    }

    /// Position of the arc `u -> v` inside the flat neighbor array, if
    /// `v` is a construction-time neighbor of `u`. Used to key per-edge
    /// data such as triangle counts.
    pub(crate) fn arc_index(&self, u: VertexId, v: VertexId) -> Option<usize> {
        let base = self.offsets[u as usize];
        self.neighbor_slice(u).binary_search(&v).ok().map(|i| base + i)
    }

    pub(crate) fn arc_count(&self) -> usize {
        self.neighbors.len()
    }

    /// Number of self-loops dropped during construction.
    pub fn self_loops_dropped(&self) -> usize {
        self.dropped_self_loops
    }

    /// Number of duplicate edges collapsed during construction.
    pub fn duplicate_edges_dropped(&self) -> usize {
        self.dropped_duplicates
    }

    /// Marks `u` dead and detaches its incident edges from all degree and
    /// neighbor queries. O(deg). Reversible via [`Graph::restore_vertex`].
    pub fn remove_vertex(&mut self, u: VertexId) -> Result<()> {
        if u as usize >= self.alive.len() {
            return Err(Error::VertexOutOfRange(u));
        }
        if !self.alive[u as usize] {
            return Err(Error::VertexDead(u));
        }
        self.alive_edges -= self.degree[u as usize] as usize;
        let (lo, hi) = (self.offsets[u as usize], self.offsets[u as usize + 1]);
        for i in lo..hi {
            let v = self.neighbors[i] as usize;
            if self.alive[v] {
                self.degree[v] -= 1;
            }
        }
        self.alive[u as usize] = false;
        self.degree[u as usize] = 0;
        self.alive_vertices -= 1;
        Ok(())
    }

    /// Undoes the removal of `u`, reconnecting it to its alive neighbors.
    pub fn restore_vertex(&mut self, u: VertexId) -> Result<()> {
        if u as usize >= self.alive.len() {
            return Err(Error::VertexOutOfRange(u));
        }
        if self.alive[u as usize] {
            return Err(Error::VertexAlive(u));
        }
        let (lo, hi) = (self.offsets[u as usize], self.offsets[u as usize + 1]);
        let mut deg = 0u32;
        for i in lo..hi {
            let v = self.neighbors[i] as usize;
            if self.alive[v] {
                self.degree[v] += 1;
                deg += 1;
            }
        }
        self.alive[u as usize] = true;
        self.degree[u as usize] = deg;
        self.alive_vertices += 1;
        self.alive_edges += deg as usize;
        Ok(())
    }

    /// Residual graph on the vertex set `s`: everything outside `s` is
    /// marked dead, survivors keep their ids. `s` must consist of alive
    /// vertices.
    pub fn induced_subgraph(&self, s: &[VertexId]) -> Result<Self> {
        let mut keep = BTreeSet::new();
        for &v in s {
            if v as usize >= self.alive.len() {
                return Err(Error::VertexOutOfRange(v));
            }
            if !self.alive[v as usize] {
                return Err(Error::VertexDead(v));
            }
            keep.insert(v);
        }
        let mut sub = self.clone();
        for u in self.alive_iter() {
            if !keep.contains(&u) {
                sub.remove_vertex(u)?;
            }
        }
        Ok(sub)
    }
}
