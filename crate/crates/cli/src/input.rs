//! Graph sources (edge-list files or generator specs) and the
//! wall-clock stopwatch wired into solvers.

use std::fs;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use csa_core::generators::{gen_ba, gen_er, gen_ws_torus};
use csa_core::timer::Stopwatch;
use csa_core::Graph;

/// Generator spec as written on the command line:
/// `er:<n>,<p>` | `ba:<n>,<m>` | `ws:<n>,<k>,<p>`.
#[derive(Debug, Clone, PartialEq)]
pub enum GenSpec {
    Er { n: usize, p: f64 },
    Ba { n: usize, m_attach: usize },
    Ws { n: usize, k_hops: usize, p: f64 },
}

impl GenSpec {
    pub fn build(&self, seed: u64) -> Result<Graph> {
        let g = match *self {
            GenSpec::Er { n, p } => gen_er(n, p, seed)?,
            GenSpec::Ba { n, m_attach } => gen_ba(n, m_attach, seed)?,
            GenSpec::Ws { n, k_hops, p } => gen_ws_torus(n, k_hops, p, seed)?,
        };
        Ok(g)
    }
}

impl FromStr for GenSpec {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        let (family, rest) = s
            .split_once(':')
            .context("generator spec must look like er:n,p | ba:n,m | ws:n,k,p")?;
        let parts: Vec<&str> = rest.split(',').collect();
        let parse_n = |t: &str| -> Result<usize> {
            t.trim().parse().with_context(|| format!("bad integer {t:?}"))
        };
        let parse_p = |t: &str| -> Result<f64> {
            t.trim().parse().with_context(|| format!("bad probability {t:?}"))
        };
        match (family, parts.as_slice()) {
            ("er", [n, p]) => Ok(GenSpec::Er {
                n: parse_n(n)?,
                p: parse_p(p)?,
            }),
            ("ba", [n, m]) => Ok(GenSpec::Ba {
                n: parse_n(n)?,
                m_attach: parse_n(m)?,
            }),
            ("ws", [n, k, p]) => Ok(GenSpec::Ws {
                n: parse_n(n)?,
                k_hops: parse_n(k)?,
                p: parse_p(p)?,
            }),
            _ => bail!("unknown generator spec {s:?}"),
        }
    }
}

/// Where the input graph comes from.
#[derive(Debug, Clone)]
pub enum GraphSource {
    File(PathBuf),
    Generated(GenSpec),
}

/// Loads or generates the input graph; generated inputs are seeded with
/// `seed`.
pub fn load_graph(source: &GraphSource, seed: u64) -> Result<Graph> {
    match source {
        GraphSource::File(path) => {
            let text = fs::read_to_string(path)
                .with_context(|| format!("cannot read edge list {}", path.display()))?;
            let g = Graph::parse_edge_list(&text)
                .with_context(|| format!("cannot parse edge list {}", path.display()))?;
            if g.self_loops_dropped() > 0 || g.duplicate_edges_dropped() > 0 {
                log::info!(
                    "{}: dropped {} self-loop(s) and {} duplicate edge(s)",
                    path.display(),
                    g.self_loops_dropped(),
                    g.duplicate_edges_dropped()
                );
            }
            Ok(g)
        }
        GraphSource::Generated(spec) => spec.build(seed),
    }
}

/// `Instant`-backed lap timer for per-step solver timings.
pub struct InstantStopwatch(Instant);

impl InstantStopwatch {
    pub fn start() -> Self {
        Self(Instant::now())
    }
}

impl Default for InstantStopwatch {
    fn default() -> Self {
        Self::start()
    }
}

impl Stopwatch for InstantStopwatch {
    fn lap_ms(&mut self) -> f64 {
        let now = Instant::now();
        let lap = now.duration_since(self.0);
        self.0 = now;
        lap.as_secs_f64() * 1e3
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gen_specs_parse() {
        assert_eq!(
            "er:35,0.2".parse::<GenSpec>().unwrap(),
            GenSpec::Er { n: 35, p: 0.2 }
        );
        assert_eq!(
            "ba:1500,3".parse::<GenSpec>().unwrap(),
            GenSpec::Ba {
                n: 1500,
                m_attach: 3
            }
        );
        assert_eq!(
            "ws:45,3,0.3".parse::<GenSpec>().unwrap(),
            GenSpec::Ws {
                n: 45,
                k_hops: 3,
                p: 0.3
            }
        );
        assert!("er:35".parse::<GenSpec>().is_err());
        assert!("zz:1,2".parse::<GenSpec>().is_err());
    }

    #[test]
    fn stopwatch_reports_laps() {
        let mut sw = InstantStopwatch::start();
        let a = sw.lap_ms();
        assert!(a >= 0.0);
    }
}
