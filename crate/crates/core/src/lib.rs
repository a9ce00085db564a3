//! Clustering vulnerability analysis for undirected networks.
//!
//! The central question this crate answers: which vertices, when removed,
//! degrade the average local clustering coefficient (ALCC) of a network
//! the most? It provides
//!
//! - a compact undirected simple-graph representation with logical vertex
//!   removal ([`graph::Graph`]),
//! - clustering measures and triangle indexing ([`clustering`]),
//! - attack solvers: an adaptive greedy with incremental triangle
//!   maintenance, a non-adaptive greedy, an exhaustive optimum, and the
//!   usual centrality baselines ([`solvers`]),
//! - synthetic network generators and a 3-SAT reduction that witnesses
//!   the hardness of the underlying search problem ([`generators`],
//!   [`reduction`]),
//! - independent-cascade and linear-threshold influence simulations that
//!   link clustering to information spread ([`influence`]).
//!
//! The crate is `no_std` (with `alloc`); IO, file formats, and the batch
//! CLI live in the companion `csa-cli` crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod clustering;
pub mod error;
pub mod generators;
pub mod graph;
pub mod influence;
pub mod reduction;
pub mod solvers;
pub mod timer;

pub(crate) mod rng;

pub use error::Error;
pub use graph::{Graph, VertexId};

/// Convenience alias used by every fallible operation in this crate.
pub type Result<T> = core::result::Result<T, Error>;
