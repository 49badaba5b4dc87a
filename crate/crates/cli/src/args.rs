use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use alm_core::PriceUnit;

#[derive(Debug, Parser)]
#[command(
    name = "alm",
    version,
    about = "Price-responsive air-conditioning load scheduler"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Optimize one look-ahead window against a price file.
    Optimize(OptimizeArgs),
    /// Re-plan every hour as real-time prices replace the forecast.
    Roll(RollArgs),
    /// Plan on day-ahead prices and cost the plan at real-time prices.
    Compare(CompareArgs),
    /// Write a synthetic diurnal price series in canonical CSV.
    Synth(SynthArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Elastic,
    Inelastic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PriceUnitArg {
    #[value(name = "cents_per_kwh", alias = "cents-per-kwh")]
    CentsPerKwh,
    #[value(name = "dollars_per_mwh", alias = "dollars-per-mwh")]
    DollarsPerMwh,
}

impl From<PriceUnitArg> for PriceUnit {
    fn from(unit: PriceUnitArg) -> Self {
        match unit {
            PriceUnitArg::CentsPerKwh => PriceUnit::CentsPerKwh,
            PriceUnitArg::DollarsPerMwh => PriceUnit::DollarsPerMwh,
        }
    }
}

/// Model and file options shared by the optimizing commands.
#[derive(Debug, Clone, Args)]
pub struct ModelArgs {
    /// Price file (day-ahead forecast for `roll` and `compare`).
    #[arg(long)]
    pub prices: PathBuf,

    #[arg(long, value_enum, default_value = "cents_per_kwh")]
    pub price_unit: PriceUnitArg,

    /// Steps in the look-ahead window.
    #[arg(long, default_value_t = 24)]
    pub horizon: usize,

    /// Measured zone temperature at hour 0, °F.
    #[arg(long, default_value_t = 75.0, allow_negative_numbers = true)]
    pub t_initial: f64,

    /// Outdoor temperature: a constant in °F or a CSV file with header `hour,temp_f`.
    #[arg(long, default_value = "95")]
    pub t_out: String,

    #[arg(long, default_value_t = 70.0, allow_negative_numbers = true)]
    pub t_min: f64,

    #[arg(long, default_value_t = 75.0, allow_negative_numbers = true)]
    pub t_max: f64,

    /// Load capacity, kW.
    #[arg(long, default_value_t = 20.0)]
    pub p_max: f64,

    /// Factor of inertia.
    #[arg(long, default_value_t = 0.8)]
    pub epsilon: f64,

    /// Thermal conversion, °F per kW (negative for cooling).
    #[arg(long, default_value_t = -2.0, allow_negative_numbers = true)]
    pub gamma: f64,

    /// Output directory for `report.json` and `trajectory.csv`.
    #[arg(long, default_value = ".")]
    pub out: PathBuf,

    /// Activate optimized control; without it the load stays on default operation.
    #[arg(long)]
    pub enable: bool,
}

#[derive(Debug, Clone, Args)]
pub struct OptimizeArgs {
    #[command(flatten)]
    pub model: ModelArgs,

    #[arg(long, value_enum, default_value = "elastic")]
    pub mode: Mode,

    /// Set point for inelastic mode, °F.
    #[arg(long, allow_negative_numbers = true)]
    pub t_set: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct RollArgs {
    #[command(flatten)]
    pub model: ModelArgs,

    /// Real-time price file.
    #[arg(long)]
    pub rt_prices: PathBuf,

    #[arg(long, default_value_t = 24)]
    pub sim_hours: usize,
}

#[derive(Debug, Clone, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub model: ModelArgs,

    /// Real-time price file.
    #[arg(long)]
    pub rt_prices: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct SynthArgs {
    #[arg(long, default_value_t = 1)]
    pub seed: u64,

    #[arg(long, default_value_t = 24)]
    pub hours: usize,

    /// Mean price, cents/kWh.
    #[arg(long, default_value_t = 10.0)]
    pub base: f64,

    /// Diurnal swing, cents/kWh.
    #[arg(long, default_value_t = 5.0)]
    pub amplitude: f64,

    /// Uniform noise half-width, cents/kWh.
    #[arg(long, default_value_t = 1.0)]
    pub noise: f64,

    /// Destination CSV file.
    #[arg(long)]
    pub out: PathBuf,
}
