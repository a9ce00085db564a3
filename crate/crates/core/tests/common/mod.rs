//! Shared fixtures and independent brute-force oracles for the
//! integration suites. Everything here works from first definitions
//! (adjacency matrices, triple enumeration, path counting) and never
//! calls the code paths it is used to check.

#![allow(dead_code)]

use csa_core::reduction::CnfFormula;
use csa_core::{Graph, VertexId};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

// ---------------------------------------------------------------------
// named graphs

pub fn k3() -> Graph {
    Graph::from_pairs(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
}

pub fn k4() -> Graph {
    Graph::from_pairs(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

pub fn c4() -> Graph {
    Graph::from_pairs(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
}

/// Triangle 0-1-2 with pendant 3 hanging off 0.
pub fn paw() -> Graph {
    Graph::from_pairs(4, [(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap()
}

/// Two triangles sharing vertex 2.
pub fn bowtie() -> Graph {
    Graph::from_pairs(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap()
}

/// Two triangles bridged by the edge 2-3.
pub fn barbell() -> Graph {
    Graph::from_pairs(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)]).unwrap()
}

// ---------------------------------------------------------------------
// random corpora

/// Erdős–Rényi sample drawn with a `StdRng`, independent of the library's
/// own generator machinery.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for u in 0..n as VertexId {
        for v in (u + 1)..n as VertexId {
            if rng.random_bool(p) {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_pairs(n, pairs).unwrap()
}

/// A deterministic mixed corpus of small graphs: named shapes plus random
/// samples across densities.
pub fn small_corpus(max_n: usize, count: usize) -> Vec<Graph> {
    let mut graphs = vec![k3(), k4(), c4(), paw(), bowtie(), barbell()];
    let ps = [0.1, 0.2, 0.3, 0.5, 0.7, 0.9];
    for i in 0..count {
        let n = 4 + (i * 7 + 3) % (max_n.saturating_sub(4).max(1));
        let p = ps[i % ps.len()];
        graphs.push(random_graph(n, p, 1000 + i as u64));
    }
    graphs
}

/// Random 3-CNF with `l` clauses over `m` variables. Variables may
/// repeat inside a clause (they must for m = 2), but a repeated variable
/// keeps one sign: a clause never holds both x and ~x.
pub fn random_formula(m: u32, l: usize, rng: &mut StdRng) -> CnfFormula {
    let mut clauses = Vec::with_capacity(l);
    for _ in 0..l {
        let signs: Vec<i32> = (0..m)
            .map(|_| if rng.random_bool(0.5) { 1 } else { -1 })
            .collect();
        let mut lits = [0i32; 3];
        for slot in &mut lits {
            let v = rng.random_range(1..=m);
            *slot = v as i32 * signs[(v - 1) as usize];
        }
        clauses.push(lits);
    }
    CnfFormula::new(m, clauses).unwrap()
}

// ---------------------------------------------------------------------
// clustering oracles (triple enumeration over the adjacency matrix)

pub struct TriangleOracle {
    pub t_node: Vec<u64>,
    pub total: u64,
    adj: Vec<Vec<bool>>,
}

impl TriangleOracle {
    pub fn build(g: &Graph) -> Self {
        let n = g.n_vertices();
        let mut adj = vec![vec![false; n]; n];
        for u in g.alive_iter() {
            for v in g.alive_neighbors(u) {
                adj[u as usize][v as usize] = true;
            }
        }
        let mut t_node = vec![0u64; n];
        let mut total = 0u64;
        for a in 0..n {
            for b in (a + 1)..n {
                if !adj[a][b] {
                    continue;
                }
                for c in (b + 1)..n {
                    if adj[a][c] && adj[b][c] {
                        t_node[a] += 1;
                        t_node[b] += 1;
                        t_node[c] += 1;
                        total += 1;
                    }
                }
            }
        }
        Self { t_node, total, adj }
    }

    /// tr(u,v) by scanning all third vertices.
    pub fn edge_triangles(&self, u: VertexId, v: VertexId) -> u64 {
        let n = self.adj.len();
        if !self.adj[u as usize][v as usize] {
            return 0;
        }
        (0..n)
            .filter(|&w| self.adj[u as usize][w] && self.adj[v as usize][w])
            .count() as u64
    }
}

/// Local clustering coefficient straight from the definition: connected
/// pairs among alive neighbors over all pairs.
pub fn lcc_oracle(g: &Graph, u: VertexId) -> f64 {
    let nbrs: Vec<VertexId> = g.alive_neighbors(u).collect();
    let d = nbrs.len();
    if d < 2 {
        return 0.0;
    }
    let mut links = 0u64;
    for i in 0..d {
        for j in (i + 1)..d {
            if g.has_edge(nbrs[i], nbrs[j]) {
                links += 1;
            }
        }
    }
    2.0 * links as f64 / (d * (d - 1)) as f64
}

pub fn alcc_oracle(g: &Graph) -> f64 {
    let mut sum = 0.0;
    for u in g.alive_iter() {
        sum += lcc_oracle(g, u);
    }
    sum / g.alive_count() as f64
}

/// ALCC after removing one vertex, via the definition-level oracle.
pub fn alcc_without_oracle(g: &Graph, u: VertexId) -> f64 {
    let mut h = g.clone();
    h.remove_vertex(u).unwrap();
    alcc_oracle(&h)
}

// ---------------------------------------------------------------------
// betweenness oracle (pairwise shortest-path counting, no accumulation)

pub fn betweenness_oracle(g: &Graph) -> Vec<f64> {
    let n = g.n_vertices();
    let alive: Vec<VertexId> = g.alive_iter().collect();
    // BFS from every vertex: distances and path counts
    let mut dist = vec![vec![usize::MAX; n]; n];
    let mut sigma = vec![vec![0.0f64; n]; n];
    for &s in &alive {
        let (d, sg) = bfs_counts(g, s);
        dist[s as usize] = d;
        sigma[s as usize] = sg;
    }
    let mut score = vec![0.0f64; n];
    for (i, &s) in alive.iter().enumerate() {
        for &t in &alive[i + 1..] {
            let dst = dist[s as usize][t as usize];
            if dst == usize::MAX {
                continue;
            }
            let total = sigma[s as usize][t as usize];
            for &v in &alive {
                if v == s || v == t {
                    continue;
                }
                let ds = dist[s as usize][v as usize];
                let dt = dist[t as usize][v as usize];
                if ds != usize::MAX && dt != usize::MAX && ds + dt == dst {
                    score[v as usize] +=
                        sigma[s as usize][v as usize] * sigma[t as usize][v as usize] / total;
                }
            }
        }
    }
    score
}

fn bfs_counts(g: &Graph, s: VertexId) -> (Vec<usize>, Vec<f64>) {
    let n = g.n_vertices();
    let mut dist = vec![usize::MAX; n];
    let mut sigma = vec![0.0f64; n];
    dist[s as usize] = 0;
    sigma[s as usize] = 1.0;
    let mut queue = std::collections::VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        for w in g.alive_neighbors(v) {
            if dist[w as usize] == usize::MAX {
                dist[w as usize] = dist[v as usize] + 1;
                queue.push_back(w);
            }
            if dist[w as usize] == dist[v as usize] + 1 {
                sigma[w as usize] += sigma[v as usize];
            }
        }
    }
    (dist, sigma)
}

// ---------------------------------------------------------------------
// statistics helpers

/// Spearman rank correlation with average ranks for ties.
pub fn spearman(xs: &[f64], ys: &[f64]) -> f64 {
    assert_eq!(xs.len(), ys.len());
    let rx = ranks(xs);
    let ry = ranks(ys);
    pearson(&rx, &ry)
}

fn ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut out = vec![0.0; values.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i;
        while j + 1 < order.len() && values[order[j + 1]] == values[order[i]] {
            j += 1;
        }
        let avg = (i + j) as f64 / 2.0 + 1.0;
        for &idx in &order[i..=j] {
            out[idx] = avg;
        }
        i = j + 1;
    }
    out
}

fn pearson(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let mut cov = 0.0;
    let mut vx = 0.0;
    let mut vy = 0.0;
    for (x, y) in xs.iter().zip(ys) {
        cov += (x - mx) * (y - my);
        vx += (x - mx) * (x - mx);
        vy += (y - my) * (y - my);
    }
    cov / (vx.sqrt() * vy.sqrt())
}
