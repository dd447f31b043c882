//! Argument surface: subcommands, flags, and their validated domain
//! translations.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qdeform::{BasicNumberKind, HVariant, ModelKind, RepKind};

#[derive(Parser, Debug)]
#[command(
    name = "qdeform",
    version,
    about = "q-deformed oscillator algebras: bracket tables, identity suites, \
             Fock residuals, and Heisenberg-picture time series"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Tabulate bracket numbers symbolically and at each q
    Basic(BasicArgs),
    /// Run the exact operator-identity suite
    Identity(IdentityArgs),
    /// Report Fock-space ladder-relation residuals
    Fock(FockArgs),
    /// Evolve the annihilator and emit a per-element time series
    Evolve(EvolveArgs),
    /// Classical-limit scans: Jackson-vs-ordinary derivative error and the
    /// fermion bracket limit table
    Limit(LimitArgs),
}

impl Command {
    pub fn common(&self) -> &CommonArgs {
        match self {
            Self::Basic(a) => &a.common,
            Self::Identity(a) => &a.common,
            Self::Fock(a) => &a.common,
            Self::Evolve(a) => &a.common,
            Self::Limit(a) => &a.common,
        }
    }
}

#[derive(Args, Debug)]
pub struct CommonArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
    /// Write the report to this path instead of stdout
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Args, Debug)]
pub struct BasicArgs {
    /// Bracket family
    #[arg(long, value_enum)]
    pub kind: BasicKindArg,
    /// Largest bracket argument to tabulate
    #[arg(long, default_value_t = 10)]
    pub n_max: u32,
    /// Evaluation points (repeat the flag for several)
    #[arg(long = "q", required = true)]
    pub q: Vec<f64>,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasicKindArg {
    BosonSym,
    BosonNonsym,
    Fermion,
}

impl BasicKindArg {
    pub fn to_kind(self) -> BasicNumberKind {
        match self {
            Self::BosonSym => BasicNumberKind::BosonSymmetric,
            Self::BosonNonsym => BasicNumberKind::BosonNonsymmetric,
            Self::Fermion => BasicNumberKind::Fermion,
        }
    }
}

#[derive(Args, Debug)]
pub struct IdentityArgs {
    /// Largest bracket argument / monomial degree exercised
    #[arg(long, default_value_t = 30)]
    pub n_max: u32,
    /// Corrupt one input on purpose (negative-control hook)
    #[arg(long, value_enum, hide = true)]
    pub inject_fault: Option<FaultKind>,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args, Debug)]
pub struct FockArgs {
    /// Representation kind
    #[arg(long, value_enum)]
    pub kind: RepKindArg,
    /// Deformation parameters (repeat the flag for several)
    #[arg(long = "q", required = true)]
    pub q: Vec<f64>,
    /// Truncation dimension (defaults to 32, or 2 for std-fermion)
    #[arg(long)]
    pub dim: Option<usize>,
    /// Corrupt one input on purpose (negative-control hook)
    #[arg(long, value_enum, hide = true)]
    pub inject_fault: Option<FaultKind>,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum RepKindArg {
    Boson,
    BosonNonsym,
    StdFermion,
    GenFermion,
}

impl RepKindArg {
    pub fn to_kind(self) -> RepKind {
        match self {
            Self::Boson => RepKind::Boson,
            Self::BosonNonsym => RepKind::BosonNonsym,
            Self::StdFermion => RepKind::StandardFermion,
            Self::GenFermion => RepKind::GeneralizedFermion,
        }
    }
}

#[derive(Args, Debug)]
pub struct EvolveArgs {
    /// Hamiltonian family
    #[arg(long, value_enum)]
    pub model: ModelArg,
    /// Evolution-equation variant
    #[arg(long, value_enum, default_value_t = VariantArg::DeformedQinv)]
    pub variant: VariantArg,
    /// Deformation parameter
    #[arg(long)]
    pub q: f64,
    /// Truncation dimension (defaults to 8, or 2 for std-fermion)
    #[arg(long)]
    pub dim: Option<usize>,
    /// Angular frequency
    #[arg(long, default_value_t = 1.0)]
    pub omega: f64,
    /// End of the time grid (absolute, same units as 1/omega)
    #[arg(long, default_value_t = 10.0)]
    pub t_max: f64,
    /// Number of integration steps; rows are emitted at t_k = k t_max/steps
    #[arg(long, default_value_t = 1000)]
    pub steps: usize,
    /// Add the closed-form frequency column next to the exact one
    #[arg(long)]
    pub compare_paper: bool,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelArg {
    BosonSym,
    BosonNonsym,
    StdFermion,
    GenFermion,
}

impl ModelArg {
    pub fn to_kind(self) -> ModelKind {
        match self {
            Self::BosonSym => ModelKind::BosonSym,
            Self::BosonNonsym => ModelKind::BosonNonsym,
            Self::StdFermion => ModelKind::StandardFermion,
            Self::GenFermion => ModelKind::GeneralizedFermion,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum VariantArg {
    Undeformed,
    DeformedQ,
    DeformedQinv,
}

impl VariantArg {
    pub fn to_variant(self) -> HVariant {
        match self {
            Self::Undeformed => HVariant::Undeformed,
            Self::DeformedQ => HVariant::DeformedQ,
            Self::DeformedQinv => HVariant::DeformedQinv,
        }
    }
}

#[derive(Args, Debug)]
pub struct LimitArgs {
    /// Deformation parameters for the derivative-error scan
    #[arg(long = "q", default_values_t = vec![1.1, 1.01, 1.001, 1.0001])]
    pub q: Vec<f64>,
    /// Largest fermion bracket argument for the limit table
    #[arg(long, default_value_t = 20)]
    pub n_max: u32,
    /// Evaluation point for the derivative comparison
    #[arg(long, default_value_t = 1.3)]
    pub x0: f64,
    /// Monomial degree of the test function x^power
    #[arg(long, default_value_t = 5)]
    pub power: u32,
    #[command(flatten)]
    pub common: CommonArgs,
}

/// What the hidden negative-control hook corrupts.
#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FaultKind {
    /// Adds 1 to one bracket number inside the recursion check.
    BasicNumber,
    /// Perturbs one ladder matrix element by 1e-6.
    LadderEntry,
}
