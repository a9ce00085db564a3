//! Error type shared by all modules.

use alloc::string::String;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("line {line}: malformed token {token:?}")]
    MalformedToken { line: usize, token: String },
    #[error("line {line}: negative vertex id {id}")]
    NegativeId { line: usize, id: i64 },
    #[error("line {line}: expected two whitespace-separated vertex ids")]
    BadEdgeLine { line: usize },
    #[error("vertex {0} out of range")]
    VertexOutOfRange(u32),
    #[error("vertex {0} is not alive")]
    VertexDead(u32),
    #[error("vertex {0} is already alive")]
    VertexAlive(u32),
    #[error("graph has no alive vertices")]
    EmptyGraph,
    #[error("operation needs at least {needed} alive vertices, graph has {alive}")]
    TooFewVertices { needed: usize, alive: usize },
    #[error("removal budget k = {k} out of range, need 1 <= k < {n}")]
    InvalidK { k: usize, n: usize },
    #[error("triangle index is inconsistent with this graph")]
    IndexMismatch,
    #[error("enumerating C({n},{k}) = {combinations} subsets exceeds the budget of {budget}")]
    EnumerationBudget {
        n: usize,
        k: usize,
        combinations: u128,
        budget: u128,
    },
    #[error("probability {0} outside [0, 1]")]
    InvalidProbability(f64),
    #[error("seed set is empty or contains no alive vertex")]
    EmptySeedSet,
    #[error("preferential attachment needs n > m_attach >= 1, got n = {n}, m_attach = {m_attach}")]
    InvalidAttachment { n: usize, m_attach: usize },
    #[error("torus lattice needs n >= 2*k_hops + 1 and k_hops >= 1, got n = {n}, k_hops = {k_hops}")]
    InvalidTorus { n: usize, k_hops: usize },
    #[error("clause {index}: {reason}")]
    InvalidClause { index: usize, reason: String },
    #[error("formula has {m} variables, exhaustive satisfiability check capped at {cap}")]
    FormulaTooLarge { m: u32, cap: u32 },
    #[error("line {line}: invalid DIMACS input: {reason}")]
    BadDimacs { line: usize, reason: String },
}
