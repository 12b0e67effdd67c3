use std::path::PathBuf;

use circbetti::homology::FieldSpec;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "circbetti",
    version,
    about = "Graded Betti numbers and properties of circulant edge ideals"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the Betti table of a graph.
    Betti(BettiArgs),
    /// Compute every available method and report entrywise differences.
    Compare(CommonArgs),
    /// Decide the combinatorial properties of a graph.
    Properties(CommonArgs),
    /// Check that a family graph is isomorphic to its join decomposition.
    Isocheck(CommonArgs),
}

#[derive(Args, Debug)]
pub struct BettiArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, value_enum, default_value_t = Method::Hochster)]
    pub method: Method,
}

#[derive(Args, Debug, Clone)]
pub struct CommonArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// Coefficient field: Q or GF(p).
    #[arg(long, default_value = "Q")]
    pub field: FieldSpec,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Directory for cached results.
    #[arg(long, env = "CIRCBETTI_CACHE")]
    pub cache_dir: Option<PathBuf>,
    #[arg(long)]
    pub no_cache: bool,
    /// Worker threads (defaults to the number of cores).
    #[arg(long)]
    pub threads: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct SourceArgs {
    #[arg(long, value_enum)]
    pub family: Option<FamilyKind>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub j: Option<usize>,
    #[arg(long)]
    pub l: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    /// Circulant graph as `n:s1,s2,...`.
    #[arg(long)]
    pub circulant: Option<String>,
    /// Edge-list file (`n <count>` header, then `u v` lines).
    #[arg(long)]
    pub edges: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    H1,
    H2,
    H3,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Hochster,
    Formula,
    Join,
    Compare,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Hochster => "hochster",
            Method::Formula => "formula",
            Method::Join => "join",
            Method::Compare => "compare",
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    M2,
    Text,
}
