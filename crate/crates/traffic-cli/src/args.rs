use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

/// Traffic distributions of random matrices: exact limits, Monte Carlo
/// estimates and audits.
#[derive(Debug, Parser)]
#[command(name = "traffic", version)]
pub struct Cli {
    /// Settings file with `key = value` lines; flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Worker threads; falls back to the config file, then TRAFFIC_THREADS.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact limiting injective traffic state of a graph.
    Ltd(LtdArgs),
    /// Monte Carlo estimates of a traffic state on a grid of dimensions.
    Estimate(EstimateArgs),
    /// Central moments of a normalized trace and their decay rate.
    Concentration(ConcentrationArgs),
    /// Traffic independence audits and mixed-moment freeness tests.
    Independence(IndependenceArgs),
    /// Exact moment table of a graph polynomial.
    Moments(MomentsArgs),
    /// Oracle-equivalence checks.
    Selftest(SelftestArgs),
}

#[derive(Debug, Args)]
pub struct LtdArgs {
    /// Graph file in the line format.
    #[arg(long)]
    pub graph: PathBuf,
    /// `label=regime`; regimes are slow, full, periodic-slow,
    /// periodic-proportional, proportional:C and fixed:B. Without any,
    /// every label is a Wigner matrix.
    #[arg(long)]
    pub regime: Vec<String>,
    /// `label=β`, complex allowed; unlisted labels get 1.
    #[arg(long)]
    pub beta: Vec<String>,
    /// Treat the single label as a Haar orthogonal matrix.
    #[arg(long, conflicts_with_all = ["regime", "beta"])]
    pub haar: bool,
    /// Dimensions for the fixed-width count.
    #[arg(long, default_value = "64,128,256")]
    pub grid: String,
}

#[derive(Debug, Args)]
pub struct EstimateArgs {
    #[arg(long)]
    pub graph: PathBuf,
    /// A model for every label, or `label=model`: wigner, full, slow:S:E,
    /// periodic:B, periodic:S:E, proportional:C, fixed:B or haar.
    #[arg(long)]
    pub ensemble: Vec<String>,
    #[arg(long)]
    pub beta: Vec<String>,
    /// Comma-separated dimensions.
    #[arg(long)]
    pub n: Option<String>,
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Estimate the injective state instead of the plain one.
    #[arg(long)]
    pub injective: bool,
}

#[derive(Debug, Args)]
pub struct ConcentrationArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub ensemble: Vec<String>,
    #[arg(long)]
    pub beta: Vec<String>,
    #[arg(long)]
    pub n: Option<String>,
    #[arg(long)]
    pub samples: Option<usize>,
    /// Even order `2m` of the central moment.
    #[arg(long)]
    pub order: Option<u32>,
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct IndependenceArgs {
    /// Graph documents separated by `---` lines.
    #[arg(long, conflicts_with_all = ["double_trees", "word"])]
    pub corpus: Option<PathBuf>,
    /// Audit every colored double tree up to this many vertices.
    #[arg(long, conflicts_with = "word")]
    pub double_trees: Option<usize>,
    /// Comma-separated labels for the double-tree corpus.
    #[arg(long)]
    pub labels: Option<String>,
    /// `label=family`; each label is its own family by default.
    #[arg(long)]
    pub family: Vec<String>,
    #[arg(long)]
    pub regime: Vec<String>,
    #[arg(long)]
    pub beta: Vec<String>,
    /// Comma-separated word for a freeness test against sampled matrices.
    #[arg(long)]
    pub word: Option<String>,
    #[arg(long)]
    pub ensemble: Vec<String>,
    #[arg(long)]
    pub n: Option<String>,
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Report only the failing graphs.
    #[arg(long)]
    pub violations_only: bool,
}

#[derive(Debug, Args)]
pub struct MomentsArgs {
    /// Polynomial such as `1*x - 1*row(x)`.
    #[arg(long)]
    pub poly: String,
    #[arg(long)]
    pub order: Option<usize>,
    #[arg(long)]
    pub regime: Vec<String>,
    #[arg(long)]
    pub beta: Vec<String>,
}

#[derive(Debug, Args)]
pub struct SelftestArgs {
    #[arg(long)]
    pub seed: Option<u64>,
}
