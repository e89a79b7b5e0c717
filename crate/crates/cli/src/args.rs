use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact spanning-tree and odd-spanning-tree counts for complete and complete
/// bipartite graphs, with brute-force verification.
#[derive(Debug, Parser)]
#[command(name = "oddtrees", version)]
pub struct Cli {
    /// Worker threads for enumerations (results do not depend on it).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub jobs: Option<u32>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print an exact count from the closed-form formulas.
    Count(CountArgs),
    /// Check every formula against its brute-force oracle.
    Verify(VerifyArgs),
    /// Tabulate a count over a range of sizes.
    Table(TableArgs),
    /// Evaluate a power sum of a linear form over the sign hypercube.
    Signsum(SignsumArgs),
    /// Print a count from a brute-force oracle.
    Oracle(OracleArgs),
    /// Time alternative evaluation strategies for the same quantity.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountKind {
    Complete,
    Bipartite,
    OddComplete,
    OddBipartite,
    Degrees,
}

#[derive(Debug, Clone, Args)]
pub struct GraphArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: Option<u32>,

    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub m: Option<u32>,

    /// Degree list for K_n, e.g. `2,2,1,1`.
    #[arg(long, allow_hyphen_values = true)]
    pub degrees: Option<String>,

    /// Degree list for side A of K_{m,n}.
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,

    /// Degree list for side B of K_{m,n}.
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(value_enum)]
    pub kind: CountKind,

    #[command(flatten)]
    pub graph: GraphArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleMethod {
    /// Degree profiles read off the Prüfer words.
    Pruefer,
    /// Every Prüfer word decoded to an edge list.
    Decode,
    /// Reduced-Laplacian determinant.
    MatrixTree,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(value_enum)]
    pub kind: CountKind,

    #[command(flatten)]
    pub graph: GraphArgs,

    #[arg(long, value_enum, default_value_t = OracleMethod::Pruefer)]
    pub method: OracleMethod,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Scope {
    Complete,
    Bipartite,
    Degrees,
    Signsum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Jsonl,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Largest n for the K_n sweeps.
    #[arg(long, default_value_t = 8)]
    pub complete_max: u32,

    /// Largest m+n for the K_{m,n} sweeps.
    #[arg(long, default_value_t = 9)]
    pub bipartite_max: u32,

    /// Sections to run.
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [Scope::Complete, Scope::Bipartite, Scope::Degrees, Scope::Signsum])]
    pub scope: Vec<Scope>,

    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,

    /// Seed for the randomized hypercube identity trials.
    #[arg(long, default_value_t = 2025)]
    pub seed: u64,

    /// Number of randomized hypercube identity trials.
    #[arg(long, default_value_t = 200)]
    pub trials: u32,

    /// Report every elapsed time as 0 so output is byte-reproducible.
    #[arg(long)]
    pub no_timings: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFamily {
    OddComplete,
    OddBipartite,
    Complete,
    Bipartite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Jsonl,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    pub family: TableFamily,

    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub from: u32,

    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub to: u32,

    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    pub format: TableFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SignsumMode {
    Direct,
    Multinomial,
    Both,
}

#[derive(Debug, Args)]
pub struct SignsumArgs {
    /// Integer coefficients, e.g. `1,-2,3`.
    #[arg(long, allow_hyphen_values = true)]
    pub coeffs: String,

    #[arg(long)]
    pub power: u32,

    #[arg(long, value_enum, default_value_t = SignsumMode::Both)]
    pub mode: SignsumMode,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BenchTask {
    /// Direct 2^n enumeration against the binomial grouping.
    HypercubeVsCollapse,
    /// Even-composition multinomial sum against the binomial form.
    CompositionSum,
    /// Prüfer brute force (degree shortcut and full decode) against the formula.
    OracleSweep,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(value_enum)]
    pub task: BenchTask,

    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: Option<u32>,

    #[arg(long)]
    pub power: Option<u32>,
}
