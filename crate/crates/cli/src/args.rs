use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use setmap::{BinomialFamily, Rational};

use crate::report::Format;

const AFTER_HELP: &str = "\
Subsets are decimal bit masks: bit i stands for vertex i (or block i for
--blocks input), so --subset 5 means {0, 2}. The default is the full set.

Graph files: first line `n m`, then m lines `u v` with 0 <= u < v < n.
`#` starts a comment.

Exit status: 0 success, 1 a verification check failed, 2 usage or input
error, 3 a cost cap was exceeded.";

#[derive(Debug, Parser)]
#[command(
    name = "setmap",
    version,
    about = "Exact chromatic polynomial expansions and set-map identity checks"
)]
#[command(after_help = AFTER_HELP)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Override a cost cap, e.g. `--cap edges=24`. Repeatable.
    #[arg(long = "cap", value_name = "NAME=VALUE", global = true)]
    pub caps: Vec<String>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Chromatic polynomial of G restricted to a subset.
    Chromatic(GraphArgs),
    /// Expansion of χ_S in a binomial-type basis.
    Expand(ExpandArgs),
    /// Run one identity verification suite.
    Verify(VerifyArgs),
    /// Brute-force counts.
    Oracle(OracleArgs),
    /// The Abel polynomial set map over a list of block sizes.
    Abel(AbelArgs),
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Graph file.
    #[arg(long)]
    pub graph: PathBuf,

    /// Vertex subset as a decimal bit mask.
    #[arg(long)]
    pub subset: Option<u32>,
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    #[command(flatten)]
    pub graph: GraphArgs,

    /// monomial | falling:a | rising | abel:a | logfamily, with a = p or p/q.
    #[arg(long, value_parser = parse_family)]
    pub basis: BinomialFamily,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckName {
    /// p_S(x+y) = Σ p_T(x) p_U(y) for the chromatic (or Abel) set map.
    Binomial,
    /// Rising-factorial coefficients against acyclic-orientation pair counts.
    Exp91,
    /// Abel(1) expansion with coefficients χ'_T(1).
    Exp92,
    /// Stable-partition expansion in the b_n(x) basis.
    Exp93,
    /// The a-parametrized expansion chosen by --basis abel:a or falling:a.
    Cexp,
    /// Monomial expansion with coefficients χ'_T(0).
    D0,
    /// Falling-factorial expansion with coefficients χ_T(1).
    Stab,
    /// Forest counts C(n-1,k-1)‖π‖^(n-k) as partition sums (--blocks).
    Pfc,
    /// Abel polynomial as a partition sum (--blocks).
    Sm3,
    /// χ-table at x·y equals the y-th power of the table at x.
    Power,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub check: CheckName,

    #[arg(long)]
    pub graph: Option<PathBuf>,

    #[arg(long)]
    pub subset: Option<u32>,

    /// Block sizes, e.g. `2,1,3`.
    #[arg(long, value_parser = parse_blocks)]
    pub blocks: Option<Blocks>,

    #[arg(long)]
    pub k: Option<usize>,

    #[arg(long, value_parser = parse_family)]
    pub basis: Option<BinomialFamily>,

    /// Base point for the power check.
    #[arg(long, value_parser = parse_rational)]
    pub x: Option<Rational>,

    /// Exponent for the power check.
    #[arg(long)]
    pub y: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleKind {
    /// Proper colorings with --x colors.
    Colorings,
    /// Acyclic orientations.
    Acyclic,
    /// Partitions of the vertices into independent sets.
    StablePartitions,
    /// Acyclic orientations whose only sink is --vertex.
    UniqueSink,
    /// Acyclic orientations with only source --source and only sink --sink.
    SinkSource,
    /// Tail forests with --k components over --blocks.
    TailForests,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(value_enum)]
    pub kind: OracleKind,

    #[arg(long)]
    pub graph: Option<PathBuf>,

    #[arg(long)]
    pub subset: Option<u32>,

    #[arg(long, value_parser = parse_rational)]
    pub x: Option<Rational>,

    #[arg(long)]
    pub vertex: Option<usize>,

    #[arg(long)]
    pub source: Option<usize>,

    #[arg(long)]
    pub sink: Option<usize>,

    #[arg(long, value_parser = parse_blocks)]
    pub blocks: Option<Blocks>,

    #[arg(long)]
    pub k: Option<usize>,
}

#[derive(Debug, Args)]
pub struct AbelArgs {
    #[arg(long, value_parser = parse_blocks)]
    pub blocks: Blocks,

    /// Set of blocks as a decimal bit mask; all subsets when omitted.
    #[arg(long)]
    pub subset: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Blocks(pub Vec<usize>);

fn parse_blocks(s: &str) -> Result<Blocks, String> {
    if s.trim().is_empty() {
        return Ok(Blocks(Vec::new()));
    }
    s.split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| format!("not a block size: {p:?}")))
        .collect::<Result<_, _>>()
        .map(Blocks)
}

fn parse_family(s: &str) -> Result<BinomialFamily, String> {
    s.parse().map_err(|e: setmap::Error| e.to_string())
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim().parse().map_err(|_| format!("not a rational number: {s:?}"))
}
