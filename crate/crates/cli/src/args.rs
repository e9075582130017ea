use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "classleak",
    version,
    about = "ROC, PR and leakage-function analysis of binary classifier scores"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Confusion counts, rates, accuracy, precision and F-beta at one threshold
    Metrics(MetricsArgs),
    /// ROC curve table
    Roc(CurveArgs),
    /// Precision-recall curve table(s), one per prior
    Pr(PrArgs),
    /// Leakage function table (u, G(u))
    Leakage(CurveArgs),
    /// AUROC by geometric area and by rank counting
    Auroc(SourceArgs),
    /// KL divergence of the positive from the negative score density
    Kl(SourceArgs),
    /// Dominance of the first classifier over the second
    Dominance(DominanceArgs),
    /// Operating points under an admission cap and/or a risk bound
    Operate(OperateArgs),
    /// Sweep of binormal ROC and PR tables with a manifest
    BinormalFamily(FamilyArgs),
    /// Brier score and reliability bins
    Calibration(CalibrationArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// `name=value` lines
    Table,
    /// JSON document
    Structured,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Output file (stdout when omitted)
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

/// Either a score file or a single binormal model.
#[derive(Debug, Args)]
pub struct Source {
    /// `score,label` file
    #[arg(long, conflicts_with_all = ["alphas", "bs"])]
    pub input: Option<PathBuf>,
    /// Binormal alpha = sigma_n / sigma_p
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub alphas: Vec<f64>,
    /// Binormal b = (mu_p - mu_n) / sigma_p
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub bs: Vec<f64>,
    /// Grid size for sampled curves and integrals
    #[arg(long, default_value_t = classleak::DEFAULT_GRID)]
    pub grid: usize,
}

#[derive(Debug, Args)]
pub struct SourceArgs {
    #[command(flatten)]
    pub source: Source,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    #[command(flatten)]
    pub source: Source,
    /// Output file for the table (stdout when omitted)
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Also render the table as an SVG plot
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PrArgs {
    #[command(flatten)]
    pub source: Source,
    /// Single prior override
    #[arg(long, conflicts_with = "pi_ps")]
    pub pi_p: Option<f64>,
    /// Several priors; `--output` is then a directory
    #[arg(long, value_delimiter = ',')]
    pub pi_ps: Vec<f64>,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MetricsArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, allow_hyphen_values = true)]
    pub tau: f64,
    /// Prior override (defaults to the class frequencies of the input)
    #[arg(long)]
    pub pi_p: Option<f64>,
    #[arg(long, default_value_t = 1.0)]
    pub beta: f64,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct DominanceArgs {
    /// Two score files, first then second classifier
    #[arg(long, num_args = 1.., conflicts_with_all = ["alphas", "bs"])]
    pub input: Vec<PathBuf>,
    /// Two binormal alphas
    #[arg(long, value_delimiter = ',')]
    pub alphas: Vec<f64>,
    /// Two binormal b values
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub bs: Vec<f64>,
    #[arg(long, default_value_t = classleak::DEFAULT_GRID)]
    pub grid: usize,
    /// Margin tolerance (0 for two score files, 1e-9 otherwise)
    #[arg(long)]
    pub epsilon: Option<f64>,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct OperateArgs {
    #[command(flatten)]
    pub source: Source,
    /// Prior (required for binormal sources)
    #[arg(long)]
    pub pi_p: Option<f64>,
    /// Maximum admission rate m
    #[arg(long)]
    pub cap_m: Option<f64>,
    #[arg(long, requires_all = ["cost_fn", "cost_max"])]
    pub cost_fp: Option<f64>,
    #[arg(long, requires_all = ["cost_fp", "cost_max"])]
    pub cost_fn: Option<f64>,
    #[arg(long, requires_all = ["cost_fp", "cost_fn"])]
    pub cost_max: Option<f64>,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    pub alphas: Vec<f64>,
    #[arg(
        long,
        value_delimiter = ',',
        required = true,
        allow_hyphen_values = true
    )]
    pub bs: Vec<f64>,
    #[arg(long, value_delimiter = ',')]
    pub pi_ps: Vec<f64>,
    #[arg(long, default_value_t = classleak::DEFAULT_GRID)]
    pub grid: usize,
    /// Directory for the tables and `manifest.json`
    #[arg(long)]
    pub output: PathBuf,
    /// Overlay plot of the ROC tables; PR tables go to `<stem>_pr.svg`
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CalibrationArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, default_value_t = 10)]
    pub bins: usize,
    #[command(flatten)]
    pub out: Output,
}
