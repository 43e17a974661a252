use antitrid_core::{ComplexScalar, Family};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::literal::{parse_complex, parse_complex_list, parse_range, parse_u64_list, parse_usize_list};
use crate::output::Format;

#[derive(Debug, Parser)]
#[command(
    name = "antitrid",
    version,
    about = "Integer powers of complex anti-tridiagonal matrices and Fibonacci/Pell complex factorizations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form r-th power of A_n or B_n
    Power(PowerArgs),
    /// Eigenvalues of A_n or B_n
    Eigs(EigsArgs),
    /// Determinant of A_n / B_n (or the tridiagonal companion)
    Det(DetArgs),
    /// Fibonacci / Pell factorization and determinant identity reports
    Factor(FactorArgs),
    /// Seeded sweep comparing closed-form powers with the brute-force oracle
    Verify(VerifyArgs),
    /// Wall-time comparison of closed-form assembly and binary exponentiation
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::A => Family::A,
            FamilyArg::B => Family::B,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct MatrixArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// Matrix dimension
    #[arg(short = 'n')]
    pub n: usize,
    /// Diagonal parameter a (complex literal such as 1+2i)
    #[arg(short = 'a', allow_hyphen_values = true, value_parser = parse_complex)]
    pub a: ComplexScalar,
    /// Off-diagonal parameter b, nonzero
    #[arg(short = 'b', allow_hyphen_values = true, value_parser = parse_complex)]
    pub b: ComplexScalar,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct FormatArgs {
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct PowerArgs {
    #[command(flatten)]
    pub matrix: MatrixArgs,
    /// Exponent; negative values need a nonsingular spectrum
    #[arg(short = 'r', allow_hyphen_values = true)]
    pub r: i64,
    /// Also compute the power by binary exponentiation and compare
    #[arg(long)]
    pub verify: bool,
    /// Relative tolerance for --verify (default 1e-8, or 1e-7 for r < 0)
    #[arg(long)]
    pub tol: Option<f64>,
    #[command(flatten)]
    pub format: FormatArgs,
}

#[derive(Debug, Args)]
pub struct EigsArgs {
    #[command(flatten)]
    pub matrix: MatrixArgs,
    /// Report |det(M - mu I)| for each eigenvalue
    #[arg(long)]
    pub residuals: bool,
    #[command(flatten)]
    pub format: FormatArgs,
}

#[derive(Debug, Args)]
pub struct DetArgs {
    #[command(flatten)]
    pub matrix: MatrixArgs,
    /// Use the tridiagonal companion instead of the anti-tridiagonal matrix
    #[arg(long)]
    pub tilde: bool,
    #[command(flatten)]
    pub format: FormatArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IdentityArg {
    #[value(name = "fib")]
    Fib,
    #[value(name = "pell")]
    Pell,
    #[value(name = "fibpoly")]
    FibPoly,
    #[value(name = "detA")]
    DetA,
    #[value(name = "detB-fib")]
    DetBFib,
    #[value(name = "detB-pell")]
    DetBPell,
    #[value(name = "laplaceB")]
    LaplaceB,
}

#[derive(Debug, Args)]
pub struct FactorArgs {
    #[arg(value_enum)]
    pub identity: IdentityArg,
    /// Inclusive range of n, `lo..hi`
    #[arg(short = 'n', value_parser = parse_range)]
    pub n: (usize, usize),
    /// Comma-separated x values (a for laplaceB); ignored by fib, pell and detB-*
    #[arg(short = 'x', allow_hyphen_values = true, value_parser = parse_complex_list, default_value = "1")]
    pub x: ::std::vec::Vec<ComplexScalar>,
    /// Override the identity's relative tolerance
    #[arg(long)]
    pub tol: Option<f64>,
    #[command(flatten)]
    pub format: FormatArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: u64,
    /// Relative tolerance for r >= 0 (r < 0 uses ten times this)
    #[arg(long)]
    pub tol: Option<f64>,
    #[command(flatten)]
    pub format: FormatArgs,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Comma-separated dimensions (each <= 1000)
    #[arg(short = 'n', value_parser = parse_usize_list)]
    pub n: ::std::vec::Vec<usize>,
    /// Comma-separated exponents (each <= 1e9)
    #[arg(short = 'r', value_parser = parse_u64_list)]
    pub r: ::std::vec::Vec<u64>,
    #[arg(long, value_enum, default_value_t = FamilyArg::A)]
    pub family: FamilyArg,
    #[arg(short = 'a', allow_hyphen_values = true, value_parser = parse_complex, default_value = "0")]
    pub a: ComplexScalar,
    #[arg(short = 'b', allow_hyphen_values = true, value_parser = parse_complex, default_value = "0.5")]
    pub b: ComplexScalar,
    #[command(flatten)]
    pub format: FormatArgs,
}
