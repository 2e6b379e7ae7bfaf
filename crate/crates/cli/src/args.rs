use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hpl_core::bounds::Target;
use hpl_core::classes::ClassKind;
use hpl_core::search::CampaignFunctional;

#[derive(Debug, Parser)]
#[command(name = "hpl", version, about = "Coefficient bounds for the hyperbola classes ST_hpl(s) and CV_hpl(s)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Taylor coefficients of q_s, Φ_{s,n} or K_{s,n}.
    Series(SeriesArgs),
    /// Closed-form bound for a coefficient functional.
    Bound(BoundArgs),
    /// Search for the supremum of a functional over a grid and compare with its bound.
    Verify(VerifyArgs),
    /// Boundary of the image domain, or membership of a point.
    Domain(DomainArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesFn {
    Q,
    Phi,
    K,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Starlike,
    Convex,
}

impl From<Kind> for ClassKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Starlike => ClassKind::Starlike,
            Kind::Convex => ClassKind::Convex,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TargetArg {
    F,
    Zf,
    Inv,
}

impl From<TargetArg> for Target {
    fn from(t: TargetArg) -> Self {
        match t {
            TargetArg::F => Target::F,
            TargetArg::Zf => Target::ZOverF,
            TargetArg::Inv => Target::Inverse,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FunctionalArg {
    Coeff,
    Fs,
    Hankel22,
}

impl From<FunctionalArg> for CampaignFunctional {
    fn from(f: FunctionalArg) -> Self {
        match f {
            FunctionalArg::Coeff => CampaignFunctional::Coefficient,
            FunctionalArg::Fs => CampaignFunctional::FeketeSzego,
            FunctionalArg::Hankel22 => CampaignFunctional::Hankel22,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct SeriesArgs {
    #[arg(long = "fn", value_enum)]
    pub function: SeriesFn,
    #[arg(long)]
    pub s: f64,
    #[arg(long, default_value_t = 1)]
    pub n_index: usize,
    #[arg(long, default_value_t = 32)]
    pub order: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct BoundArgs {
    #[arg(long, value_enum)]
    pub functional: FunctionalArg,
    #[arg(long, value_enum)]
    pub kind: Kind,
    #[arg(long, value_enum, default_value_t = TargetArg::F)]
    pub target: TargetArg,
    #[arg(long)]
    pub s: f64,
    /// Required for `fs`.
    #[arg(long, allow_negative_numbers = true)]
    pub lambda: Option<f64>,
    /// Required for `coeff`.
    #[arg(long)]
    pub n: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub functional: FunctionalArg,
    #[arg(long, value_enum)]
    pub kind: Kind,
    #[arg(long, value_enum, default_value_t = TargetArg::F)]
    pub target: TargetArg,
    /// `a:b:step`, inclusive of `b`.
    #[arg(long, allow_hyphen_values = true)]
    pub s_grid: String,
    /// `a:b:step`; required for `fs`.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda_grid: Option<String>,
    /// `a:b:step` over coefficient indices; `coeff` defaults to 2:10:1.
    #[arg(long)]
    pub n_grid: Option<String>,
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1e-3)]
    pub tol_attain: f64,
    #[arg(long, default_value_t = 1e-9)]
    pub tol_violate: f64,
    #[arg(long, default_value_t = 4)]
    pub refine_steps: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct DomainArgs {
    #[arg(long)]
    pub s: f64,
    /// Sample the boundary at `--count` angles.
    #[arg(long, conflicts_with = "probe", requires = "count")]
    pub boundary: bool,
    #[arg(long)]
    pub count: Option<usize>,
    /// Classify the point `re,im`.
    #[arg(long, allow_hyphen_values = true, required_unless_present = "boundary")]
    pub probe: Option<String>,
    #[command(flatten)]
    pub output: OutputArgs,
}
