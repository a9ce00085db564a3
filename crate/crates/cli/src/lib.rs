//! Experiment harness behind the `csa` binary: input loading, attack and
//! influence pipelines, and CSV emission.

pub mod csvout;
pub mod harness;
pub mod input;

pub use csvout::{fmt_sig12, CsvWriter};
pub use harness::{run_attack, run_influence, AttackRow, ExperimentConfig, InfluenceRow, KSpec};
pub use input::{load_graph, GenSpec, GraphSource, InstantStopwatch};
