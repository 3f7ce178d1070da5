use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "stoimenow",
    version,
    about = "Stoimenow matchings: generation, counts, series and checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Arcs,
    Csv,
    Json,
    Bfile,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    HEq,
    FCatalan,
    CaseSums,
    Fibonacci,
    Omega,
    Bijections,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Op {
    Glue,
    Split,
    String,
    Unstring,
    Omega,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List Stoimenow matchings, one arc list per line.
    Gen(GenArgs),
    /// Count Stoimenow matchings avoiding a pattern set.
    Count(CountArgs),
    /// Compare brute-force counts with the registered closed forms.
    Table(TableArgs),
    /// Expand a generating function.
    Series(SeriesArgs),
    /// Run an identity or property suite.
    Check(CheckArgs),
    /// Apply one of the bijections.
    Biject(BijectArgs),
    /// Emit b-file lines for a registered row, or list the known tags.
    Oeis(OeisArgs),
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub avoid: Option<String>,
    #[arg(long, value_enum, default_value = "arcs")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long, conflicts_with = "n_max", required_unless_present = "n_max")]
    pub n: Option<usize>,
    #[arg(long)]
    pub n_max: Option<usize>,
    #[arg(long)]
    pub avoid: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, default_value_t = 7)]
    pub n_max: usize,
    /// Pattern sets such as `P1,P2`; repeat the flag or separate with `;`.
    #[arg(long)]
    pub rows: Vec<String>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(long, conflicts_with_all = ["num", "den"])]
    pub name: Option<String>,
    #[arg(long, requires = "den")]
    pub num: Option<String>,
    #[arg(long, requires = "num")]
    pub den: Option<String>,
    #[arg(long, default_value_t = 12)]
    pub order: usize,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long)]
    pub with_zero: bool,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    #[arg(long, default_value_t = 12)]
    pub order: usize,
    #[arg(long, default_value_t = 7)]
    pub n_max: usize,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct BijectArgs {
    #[arg(long, value_enum)]
    pub op: Op,
    /// Arc list, `a`/`b` string, or `M1 | M2` for glue.
    #[arg(long)]
    pub input: String,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct OeisArgs {
    #[arg(long)]
    pub name: Option<String>,
    #[arg(long, default_value_t = 12)]
    pub order: usize,
    #[arg(long)]
    pub with_zero: bool,
}
