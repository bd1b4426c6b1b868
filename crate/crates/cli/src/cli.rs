use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Crosscuts, extraction lemmas, grid colourings and exact Turán numbers
/// for 3-uniform expansions of graphs.
#[derive(Debug, Parser)]
#[command(name = "hyperexp", version, propagate_version = true)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Print JSON instead of the human rendering.
    #[arg(long, global = true, env = "HYPEREXP_JSON")]
    pub json: bool,

    /// Wall-clock budget for searches, in milliseconds.
    #[arg(long, global = true, env = "HYPEREXP_BUDGET_MS")]
    pub budget_ms: Option<u64>,

    /// Node budget for searches.
    #[arg(long, global = true, env = "HYPEREXP_BUDGET_NODES")]
    pub budget_nodes: Option<u64>,

    /// Seed for randomised steps.
    #[arg(long, global = true, env = "HYPEREXP_SEED", default_value_t = 20240601)]
    pub seed: u64,

    /// Worker threads for parallel searches.
    #[arg(long, global = true, env = "HYPEREXP_WORKERS", default_value_t = 1)]
    pub workers: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Method {
    Auto,
    Bnb,
    Dp,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expansion G⁺ of a graph, as a triple file.
    Expand {
        #[arg(long)]
        graph: PathBuf,
    },
    /// σ(G⁺) and the optimal crosscut pair (I, R).
    Sigma {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// Check the crosscut-pair inequalities on a tree.
    CrosscutAudit {
        #[arg(long)]
        tree: PathBuf,
    },
    /// λ of a forest.
    Lambda {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Join a forest into a tree with the same σ.
    CompleteTree {
        #[arg(long)]
        forest: PathBuf,
    },
    /// (d+1)-full subsystem left after deleting pairs of codegree at most d.
    FullSubgraph {
        #[arg(long)]
        triples: PathBuf,
        #[arg(long)]
        d: usize,
    },
    /// Find a sunflower with s petals in a set family.
    Sunflower {
        #[arg(long)]
        sets: PathBuf,
        #[arg(long)]
        s: usize,
        /// Maximum set size; defaults to the largest set in the file.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Pairwise disjoint sets A_i + a_i from an augmented family.
    TrimSelect {
        #[arg(long)]
        family: PathBuf,
    },
    /// K_{t,t} in a graph avoiding the forbidden set of each of its edges.
    Biclique {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        lists: PathBuf,
        #[arg(long)]
        host: PathBuf,
        #[arg(long)]
        t: usize,
        /// Apply the random vertex filter (seeded) before searching.
        #[arg(long)]
        filter: bool,
    },
    /// Labels of a grid colouring.
    Classify {
        #[arg(long)]
        coloring: PathBuf,
    },
    /// First classified s × s subgrid.
    RamseySubgrid {
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        s: usize,
    },
    /// Lists L(e) of a grid inside a triple system.
    Lists(GridArgs),
    /// m-multicolouring of a grid; with --s, a rainbow or structured one.
    Multicolor {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        s: Option<usize>,
    },
    /// Copy of a triple system (or of G⁺ with --graph) in a host.
    Contains {
        #[arg(long)]
        host: PathBuf,
        #[arg(long, conflicts_with = "graph", required_unless_present = "graph")]
        pattern: Option<PathBuf>,
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// Triples meeting the core {0..c-1} exactly once.
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        c: usize,
    },
    /// Exact ex₃(n, F).
    Turan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        forbid: PathBuf,
    },
    /// Lower-bound construction and exact values for a forest, per n.
    AuditTheorem1 {
        #[arg(long)]
        forest: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
    },
    /// The quadratic G⁺-free family for σ ≥ 2.
    AuditJump {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Args)]
pub struct GridArgs {
    #[arg(long)]
    pub triples: PathBuf,
    /// Left side, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub x: Vec<usize>,
    /// Right side, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub y: Vec<usize>,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Expand { .. } => "expand",
            Command::Sigma { .. } => "sigma",
            Command::CrosscutAudit { .. } => "crosscut-audit",
            Command::Lambda { .. } => "lambda",
            Command::CompleteTree { .. } => "complete-tree",
            Command::FullSubgraph { .. } => "full-subgraph",
            Command::Sunflower { .. } => "sunflower",
            Command::TrimSelect { .. } => "trim-select",
            Command::Biclique { .. } => "biclique",
            Command::Classify { .. } => "classify",
            Command::RamseySubgrid { .. } => "ramsey-subgrid",
            Command::Lists(_) => "lists",
            Command::Multicolor { .. } => "multicolor",
            Command::Contains { .. } => "contains",
            Command::Construct { .. } => "construct",
            Command::Turan { .. } => "turan",
            Command::AuditTheorem1 { .. } => "audit-theorem1",
            Command::AuditJump { .. } => "audit-jump",
        }
    }
}
