use std::path::PathBuf;

use boole_core::{IdentityId, LambdaMode, Rat};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "boole", version, about = "Exact Boole numbers, ODE coefficient triangles and identity checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Tables of Boole, higher-order Boole, Euler or Stirling numbers.
    Numbers(NumbersArgs),
    /// The ODE coefficient triangle a_k(N; λ).
    Triangle(TriangleArgs),
    /// Truncated series of F(t; λ)^r or its derivatives.
    Series(SeriesArgs),
    /// Verify identities over bounded grids. Exit status 1 on any failure.
    Verify(VerifyArgs),
    /// Boole table, triangle and full verification in one run.
    All(AllArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Boole,
    BoolePoly,
    Euler,
    Stirling1,
    Stirling2,
}

#[derive(Args, Debug, Clone)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct NumbersArgs {
    #[arg(long, value_enum, default_value_t = FamilyArg::Boole)]
    pub family: FamilyArg,
    #[arg(long = "n-max", default_value_t = 16)]
    pub n_max: usize,
    /// Order r of higher-order Boole or Euler numbers.
    #[arg(long, default_value_t = 1)]
    pub r: u32,
    /// Shift x for Boole polynomials Bl_n(x | λ), as p or p/q.
    #[arg(long, value_parser = parse_rat, default_value = "0")]
    pub x: Rat,
    /// "symbolic" or a nonzero rational p/q.
    #[arg(long, value_parser = parse_lambda, default_value = "symbolic")]
    pub lambda: LambdaMode,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct TriangleArgs {
    #[arg(long = "N-max", default_value_t = 8)]
    pub big_n_max: usize,
    #[arg(long, value_parser = parse_lambda, default_value = "symbolic")]
    pub lambda: LambdaMode,
    /// Pretty-print the square matrix (a_i(j; λ)) instead of rows.
    #[arg(long)]
    pub matrix: bool,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    /// Truncation order M: the series is known mod t^M.
    #[arg(long, default_value_t = 17)]
    pub order: usize,
    #[arg(long, default_value_t = 1)]
    pub r: u32,
    /// Differentiate this many times (the order drops accordingly).
    #[arg(long, default_value_t = 0)]
    pub derivative: usize,
    #[arg(long, value_parser = parse_lambda, default_value = "symbolic")]
    pub lambda: LambdaMode,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug, Clone)]
pub struct GridArgs {
    #[arg(long = "N-max", default_value_t = 8)]
    pub big_n_max: usize,
    #[arg(long = "k-max", default_value_t = 8)]
    pub k_max: usize,
    #[arg(long = "n-max", default_value_t = 12)]
    pub n_max: usize,
    #[arg(long = "i-max", default_value_t = 4)]
    pub i_max: usize,
    /// Series order for the ODE check; must be at least N-max + 2.
    #[arg(long, default_value_t = 16)]
    pub order: usize,
    #[arg(long, value_parser = parse_lambda, default_value = "symbolic")]
    pub lambda: LambdaMode,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Run every identity family (the default when no --identity is given).
    #[arg(long)]
    pub all: bool,
    /// Restrict to these identities (ODE, THM3, EQ32, EQ34, EQ36, EQ38, THM4, CHANGHEE).
    #[arg(long, value_parser = parse_identity, conflicts_with = "all")]
    pub identity: Vec<IdentityId>,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct AllArgs {
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub output: Output,
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    s.parse().map_err(|e: boole_core::Error| e.to_string())
}

fn parse_lambda(s: &str) -> Result<LambdaMode, String> {
    s.parse().map_err(|e: boole_core::Error| format!("{e} (expected \"symbolic\" or a nonzero p/q)"))
}

fn parse_identity(s: &str) -> Result<IdentityId, String> {
    s.parse().map_err(|e: boole_core::Error| e.to_string())
}
