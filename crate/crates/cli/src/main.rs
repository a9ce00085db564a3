//! `csa` — batch experiments on the clustering vulnerability of networks.

use std::fs;
use std::io::Write as _;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use csa_core::clustering::{alcc, max_lcc, TriangleIndex};
use csa_core::influence::SpreadModel;
use csa_core::reduction::{reduce_3sat, CnfFormula, VertexRole};
use csa_core::solvers::{emit_cubic_ip, DeltaMode, Method, DEFAULT_ENUMERATION_BUDGET};

use csa_cli::harness::{attack_csv, influence_csv, run_attack, run_influence, ExperimentConfig, KSpec};
use csa_cli::input::{load_graph, GenSpec, GraphSource};

#[derive(Parser)]
#[command(
    name = "csa",
    about = "Quantify how vulnerable a network's average clustering coefficient is to node removal",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Edge-list file ('#' comments, one "u v" pair per line)
    #[arg(long, value_name = "PATH", conflicts_with = "gen")]
    input: Option<PathBuf>,
    /// Generator spec: er:<n>,<p> | ba:<n>,<m> | ws:<n>,<k>,<p>
    #[arg(long, value_name = "SPEC")]
    gen: Option<GenSpec>,
}

impl InputArgs {
    fn source(&self) -> Result<GraphSource> {
        match (&self.input, &self.gen) {
            (Some(path), None) => Ok(GraphSource::File(path.clone())),
            (None, Some(spec)) => Ok(GraphSource::Generated(spec.clone())),
            _ => bail!("exactly one of --input or --gen is required"),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate a synthetic graph and write it as an edge list
    Gen {
        /// Generator spec: er:<n>,<p> | ba:<n>,<m> | ws:<n>,<k>,<p>
        #[arg(long, value_name = "SPEC")]
        gen: GenSpec,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path (stdout when omitted)
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Print clustering statistics of a graph
    Alcc {
        #[command(flatten)]
        input: InputArgs,
        /// Seed for generated inputs
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run removal attacks and emit per-step CSV trajectories
    Attack {
        #[command(flatten)]
        input: InputArgs,
        /// Comma-separated method list (default: every heuristic;
        /// faga, simple_greedy, optimal, random_fail, max_degree,
        /// lcc_greedy, betweenness)
        #[arg(long, value_delimiter = ',', value_name = "LIST")]
        methods: Vec<Method>,
        /// Absolute removal budget
        #[arg(long, conflicts_with = "k_frac")]
        k: Option<usize>,
        /// Budget as a fraction of N, resolved as max(1, floor(f*N))
        #[arg(long, value_name = "REAL")]
        k_frac: Option<f64>,
        /// Incremental score variant for the adaptive greedy
        #[arg(long, default_value = "exact", value_parser = parse_mode)]
        mode: DeltaMode,
        /// Seed(s); repeat the flag for several runs per method
        #[arg(long, default_values_t = [0u64])]
        seed: Vec<u64>,
        /// Subset budget for the exhaustive solver
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
        budget: u128,
        /// Keep simple_greedy in the default method set even on large
        /// inputs (N > 5000)
        #[arg(long)]
        include_simple_greedy: bool,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Sweep torus rewiring probabilities and relate ALCC to spread
    Influence {
        /// Torus side length (N = n^2 vertices)
        #[arg(long, default_value_t = 20)]
        ws_n: usize,
        /// Lattice closure radius in hops
        #[arg(long, default_value_t = 3)]
        ws_k: usize,
        /// Comma-separated rewiring probabilities
        #[arg(
            long,
            value_delimiter = ',',
            default_values_t = [0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9]
        )]
        p_grid: Vec<f64>,
        /// Propagation model: ic | lt
        #[arg(long, default_value = "ic", value_parser = parse_model)]
        model: SpreadModel,
        /// Uniform edge probability for the independent cascade
        #[arg(long, default_value_t = 0.5)]
        edge_prob: f64,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Reduce a DIMACS 3-CNF formula to a removal-attack instance
    Reduce3sat {
        /// DIMACS CNF file
        #[arg(long, value_name = "PATH")]
        input: PathBuf,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Emit the cubic 0/1 program whose optimum is the residual ALCC
    EmitIp {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

fn parse_mode(s: &str) -> Result<DeltaMode, String> {
    s.parse().map_err(|_| format!("unknown mode {s:?}, expected paper|exact"))
}

fn parse_model(s: &str) -> Result<SpreadModel, String> {
    match s {
        "ic" => Ok(SpreadModel::Ic),
        "lt" => Ok(SpreadModel::Lt),
        _ => Err(format!("unknown model {s:?}, expected ic|lt")),
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text)
            .with_context(|| format!("cannot write {}", path.display()))?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn main() -> Result<()> {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match cli.command {
        Command::Gen { gen, seed, out } => {
            let g = gen.build(seed)?;
            emit(&out, &g.write_edge_list())?;
        }
        Command::Alcc { input, seed } => {
            let g = load_graph(&input.source()?, seed)?;
            let idx = TriangleIndex::build(&g);
            println!(
                "n={} m={} triangles={} alcc={} max_lcc={}",
                g.alive_count(),
                g.edge_count(),
                idx.total_triangles(),
                csa_cli::fmt_sig12(alcc(&g)?),
                csa_cli::fmt_sig12(max_lcc(&g)?),
            );
        }
        Command::Attack {
            input,
            methods,
            k,
            k_frac,
            mode,
            seed,
            budget,
            include_simple_greedy,
            out,
        } => {
            let g = load_graph(&input.source()?, seed[0])?;
            let methods = resolve_methods(methods, g.alive_count(), include_simple_greedy);
            let k = match (k, k_frac) {
                (Some(k), None) => KSpec::Absolute(k),
                (None, Some(f)) => KSpec::Fraction(f),
                (None, None) => bail!("one of --k or --k-frac is required"),
                _ => unreachable!("clap conflicts_with"),
            };
            let cfg = ExperimentConfig {
                methods,
                k,
                seeds: seed,
                mode,
                budget,
            };
            let rows = run_attack(&g, &cfg)?;
            emit(&out, &attack_csv(&rows))?;
        }
        Command::Influence {
            ws_n,
            ws_k,
            p_grid,
            model,
            edge_prob,
            trials,
            seed,
            out,
        } => {
            let rows = run_influence(ws_n, ws_k, &p_grid, model, edge_prob, trials, seed)?;
            emit(&out, &influence_csv(&rows))?;
        }
        Command::Reduce3sat { input, out } => {
            let text = fs::read_to_string(&input)
                .with_context(|| format!("cannot read {}", input.display()))?;
            let formula = CnfFormula::parse_dimacs(&text)?;
            let inst = reduce_3sat(&formula)?;
            let blues = inst.roles.iter().filter(|r| matches!(r, VertexRole::Blue)).count();
            let greens = inst.roles.iter().filter(|r| matches!(r, VertexRole::Green)).count();
            let mut body = String::new();
            body.push_str(&format!(
                "# 3-SAT reduction: vars={} clauses={} k={}\n",
                formula.n_vars(),
                formula.clauses().len(),
                inst.k
            ));
            body.push_str(&format!(
                "# roles (half-open id ranges): blue [0,{}) green [{},{}) red [{},{})\n",
                blues,
                blues,
                blues + greens,
                blues + greens,
                inst.graph.n_vertices()
            ));
            body.push_str(&inst.graph.write_edge_list());
            emit(&out, &body)?;
        }
        Command::EmitIp { input, k, seed, out } => {
            let g = load_graph(&input.source()?, seed)?;
            let text = emit_cubic_ip(&g, k)?;
            emit(&out, &text)?;
        }
    }
    Ok(())
}

/// Default method set: every heuristic; the quadratic-time simple greedy
/// is dropped on large inputs unless explicitly requested, and the
/// exhaustive optimum only runs when named.
fn resolve_methods(given: Vec<Method>, n: usize, include_simple_greedy: bool) -> Vec<Method> {
    if !given.is_empty() {
        return given;
    }
    let mut methods = vec![
        Method::Faga,
        Method::SimpleGreedy,
        Method::RandomFail,
        Method::MaxDegree,
        Method::LccGreedy,
        Method::Betweenness,
    ];
    if n > 5000 && !include_simple_greedy {
        log::warn!("N = {} > 5000: dropping simple_greedy from the default set (pass --include-simple-greedy or --methods to keep it)", n);
        methods.retain(|&m| m != Method::SimpleGreedy);
    }
    methods
}
