//! 3-SAT instances and their reduction to the clustering-attack decision
//! problem.
//!
//! The reduction builds, for a formula with `m` variables and `l`
//! clauses, a graph in which some `m + 2l` vertices can be removed to
//! leave a triangle-free residual iff the formula is satisfiable:
//!
//! 1. a blue 3-clique per clause, one vertex per literal occurrence,
//! 2. a green vertex pair per variable (positive and negated literal),
//!    joined by an edge,
//! 3. an edge from each blue vertex to the green vertex of its literal,
//! 4. a red dummy vertex per existing edge, adjacent to both endpoints,
//!    which turns every edge into a triangle.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::{Graph, VertexId};
use crate::Result;

/// Largest variable count accepted by [`sat_brute_force`].
pub const BRUTE_FORCE_VAR_CAP: u32 = 24;

/// A 3-CNF formula. Literals are nonzero signed variable indices in
/// `1..=n_vars`; clause `[2, -3, 2]` reads `x2 or not x3 or x2`.
/// Clauses have exactly three literals; under-length clauses must be
/// padded by repeating a literal (the convention used by the DIMACS
/// parser). A clause may never contain a variable and its negation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    n_vars: u32,
    clauses: Vec<[i32; 3]>,
}

impl CnfFormula {
    pub fn new(n_vars: u32, clauses: Vec<[i32; 3]>) -> Result<Self> {
        for (index, clause) in clauses.iter().enumerate() {
            for &lit in clause {
                if lit == 0 || lit.unsigned_abs() > n_vars {
                    return Err(Error::InvalidClause {
                        index,
                        reason: "literal out of range".to_string(),
                    });
                }
            }
            for (i, &a) in clause.iter().enumerate() {
                if clause[i + 1..].contains(&-a) {
                    return Err(Error::InvalidClause {
                        index,
                        reason: "clause contains a variable and its negation".to_string(),
                    });
                }
            }
        }
        Ok(Self { n_vars, clauses })
    }

    /// Parses DIMACS CNF text (`p cnf <vars> <clauses>` header, `c`
    /// comment lines, clauses terminated by `0`). Clauses of one or two
    /// literals are padded by repetition; clauses longer than three
    /// literals are rejected.
    pub fn parse_dimacs(text: &str) -> Result<Self> {
        let mut n_vars: Option<u32> = None;
        let mut declared = 0usize;
        let mut clauses: Vec<[i32; 3]> = Vec::new();
        let mut current: Vec<i32> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('c') {
                continue;
            }
            if trimmed.starts_with('p') {
                if n_vars.is_some() {
                    return Err(Error::BadDimacs {
                        line,
                        reason: "duplicate problem line".to_string(),
                    });
                }
                let fields: Vec<&str> = trimmed.split_whitespace().collect();
                if fields.len() != 4 || fields[1] != "cnf" {
                    return Err(Error::BadDimacs {
                        line,
                        reason: "expected `p cnf <vars> <clauses>`".to_string(),
                    });
                }
                n_vars = Some(fields[2].parse().map_err(|_| Error::BadDimacs {
                    line,
                    reason: "bad variable count".to_string(),
                })?);
                declared = fields[3].parse().map_err(|_| Error::BadDimacs {
                    line,
                    reason: "bad clause count".to_string(),
                })?;
                continue;
            }
            if n_vars.is_none() {
                return Err(Error::BadDimacs {
                    line,
                    reason: "clause before problem line".to_string(),
                });
            }
            for token in trimmed.split_whitespace() {
                let lit: i32 = token.parse().map_err(|_| Error::BadDimacs {
                    line,
                    reason: "bad literal".to_string(),
                })?;
                if lit == 0 {
                    let padded = pad_clause(&current, line)?;
                    clauses.push(padded);
                    current.clear();
                } else {
                    current.push(lit);
                }
            }
        }
        if !current.is_empty() {
            return Err(Error::BadDimacs {
                line: text.lines().count(),
                reason: "unterminated clause".to_string(),
            });
        }
        if clauses.len() != declared {
            return Err(Error::BadDimacs {
                line: text.lines().count(),
                reason: "clause count does not match header".to_string(),
            });
        }
        Self::new(n_vars.unwrap(), clauses)
    }

    pub fn n_vars(&self) -> u32 {
        self.n_vars
    }

    pub fn clauses(&self) -> &[[i32; 3]] {
        &self.clauses
    }

    fn satisfied_by(&self, assignment: u32) -> bool {
        self.clauses.iter().all(|clause| {
            clause.iter().any(|&lit| {
                let var = lit.unsigned_abs() - 1;
                let value = assignment >> var & 1 == 1;
                (lit > 0) == value
            })
        })
    }
}

fn pad_clause(lits: &[i32], line: usize) -> Result<[i32; 3]> {
    match lits {
        [] => Err(Error::BadDimacs {
            line,
            reason: "empty clause".to_string(),
        }),
        &[a] => Ok([a, a, a]),
        &[a, b] => Ok([a, b, b]),
        &[a, b, c] => Ok([a, b, c]),
        _ => Err(Error::BadDimacs {
            line,
            reason: "clause has more than three literals".to_string(),
        }),
    }
}

/// Vertex classes of a reduction graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexRole {
    /// Clause-clique vertex, one per literal occurrence.
    Blue,
    /// Literal vertex, two per variable.
    Green,
    /// Dummy vertex guarding one original edge.
    Red,
}

impl VertexRole {
    pub fn as_str(&self) -> &'static str {
        match self {
            VertexRole::Blue => "blue",
            VertexRole::Green => "green",
            VertexRole::Red => "red",
        }
    }
}

/// Output of [`reduce_3sat`]: the graph, the removal budget `k = m + 2l`,
/// and the role of every vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct ReductionInstance {
    pub graph: Graph,
    pub k: usize,
    pub roles: Vec<VertexRole>,
}

impl ReductionInstance {
    /// Blue and green vertex ids: the only candidates an optimal removal
    /// set ever needs (any dummy can be swapped for an adjacent literal
    /// vertex without covering fewer triangles).
    pub fn non_dummy_vertices(&self) -> Vec<VertexId> {
        self.roles
            .iter()
            .enumerate()
            .filter(|(_, r)| !matches!(r, VertexRole::Red))
            .map(|(v, _)| v as VertexId)
            .collect()
    }
}

/// Builds the hardness-reduction graph for `f`. Repeated literals in a
/// clause are fine: their blue vertices simply attach to the same green
/// vertex, and the extra blue-blue-green triangles are covered by the
/// same vertex-cover argument as the clause cliques.
pub fn reduce_3sat(f: &CnfFormula) -> Result<ReductionInstance> {
    let m = f.n_vars() as usize;
    let l = f.clauses().len();

    let blue = |clause: usize, slot: usize| (3 * clause + slot) as VertexId;
    let green = |lit: i32| {
        let var = lit.unsigned_abs() as usize - 1;
        (3 * l + 2 * var + usize::from(lit < 0)) as VertexId
    };

    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    for (c, clause) in f.clauses().iter().enumerate() {
        // clause 3-clique
        edges.push((blue(c, 0), blue(c, 1)));
        edges.push((blue(c, 0), blue(c, 2)));
        edges.push((blue(c, 1), blue(c, 2)));
        // literal attachment
        for (slot, &lit) in clause.iter().enumerate() {
            edges.push((blue(c, slot), green(lit)));
        }
    }
    for var in 0..m {
        let pos = (3 * l + 2 * var) as VertexId;
        edges.push((pos, pos + 1));
    }
    for e in &mut edges {
        if e.0 > e.1 {
            *e = (e.1, e.0);
        }
    }
    edges.sort_unstable();
    edges.dedup();

    let first_dummy = 3 * l + 2 * m;
    let n = first_dummy + edges.len();
    let mut all = edges.clone();
    for (i, &(a, b)) in edges.iter().enumerate() {
        let d = (first_dummy + i) as VertexId;
        all.push((a, d));
        all.push((b, d));
    }
    let graph = Graph::from_pairs(n, all)?;
    debug_assert_eq!(graph.duplicate_edges_dropped(), 0);

    let mut roles = Vec::with_capacity(n);
    roles.extend(core::iter::repeat(VertexRole::Blue).take(3 * l));
    roles.extend(core::iter::repeat(VertexRole::Green).take(2 * m));
    roles.extend(core::iter::repeat(VertexRole::Red).take(edges.len()));
    Ok(ReductionInstance {
        graph,
        k: m + 2 * l,
        roles,
    })
}

/// Exhaustive satisfiability check over all `2^m` assignments.
pub fn sat_brute_force(f: &CnfFormula) -> Result<bool> {
    if f.n_vars() > BRUTE_FORCE_VAR_CAP {
        return Err(Error::FormulaTooLarge {
            m: f.n_vars(),
            cap: BRUTE_FORCE_VAR_CAP,
        });
    }
    let assignments = 1u32 << f.n_vars();
    Ok((0..assignments).any(|a| f.satisfied_by(a)))
}

/// Plain-text rendering of a formula, useful in diagnostics.
pub fn format_clause(clause: &[i32; 3]) -> String {
    use core::fmt::Write as _;
    let mut out = String::new();
    for (i, &lit) in clause.iter().enumerate() {
        if i > 0 {
            out.push_str(" v ");
        }
        if lit < 0 {
            out.push('~');
        }
        let _ = write!(out, "x{}", lit.unsigned_abs());
    }
    out
}
