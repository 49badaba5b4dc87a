use std::fs;
use std::path::{Path, PathBuf};

use alm_core::prices::parse_hourly_csv;
use alm_core::{
    parse_price_csv, ComfortZone, LoadSpec, Outdoor, PriceSeries, PriceUnit, ThermalParams,
};

use crate::args::ModelArgs;
use crate::error::CliError;

/// Validated inputs for one run of an optimizing command.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub thermal: ThermalParams,
    pub zone: ComfortZone,
    pub load: LoadSpec,
    pub horizon: usize,
    pub t_initial: f64,
    pub outdoor: Outdoor,
    pub prices: PriceSeries,
    pub price_unit: PriceUnit,
    pub out_dir: PathBuf,
    pub enabled: bool,
}

impl RunConfig {
    pub fn from_args(args: &ModelArgs) -> Result<Self, CliError> {
        let thermal = ThermalParams::new(args.epsilon, args.gamma)?;
        let zone = ComfortZone::new(args.t_min, args.t_max)?;
        if !(args.p_max.is_finite() && args.p_max > 0.0) {
            return Err(CliError::Usage(format!(
                "--p-max must be positive, got {}",
                args.p_max
            )));
        }
        let load = LoadSpec::new(0.0, args.p_max)?;
        if args.horizon == 0 {
            return Err(CliError::Usage("--horizon must be at least 1".into()));
        }
        if !args.t_initial.is_finite() {
            return Err(CliError::Usage("--t-initial must be finite".into()));
        }
        let price_unit = PriceUnit::from(args.price_unit);
        let prices = read_prices(&args.prices, price_unit, "day-ahead")?;
        let outdoor = parse_outdoor(&args.t_out)?;
        Ok(Self {
            thermal,
            zone,
            load,
            horizon: args.horizon,
            t_initial: args.t_initial,
            outdoor,
            prices,
            price_unit,
            out_dir: args.out.clone(),
            enabled: args.enable,
        })
    }
}

pub fn read_prices(path: &Path, unit: PriceUnit, label: &str) -> Result<PriceSeries, CliError> {
    let text = read(path)?;
    parse_price_csv(&text, unit)
        .map(|s| s.with_label(label))
        .map_err(|source| CliError::Input {
            path: path.to_owned(),
            source,
        })
}

/// A bare number is a constant outdoor temperature; anything else is a
/// CSV path with header `hour,temp_f`.
fn parse_outdoor(value: &str) -> Result<Outdoor, CliError> {
    if let Ok(t) = value.trim().parse::<f64>() {
        if !t.is_finite() {
            return Err(CliError::Usage(format!("--t-out must be finite, got {t}")));
        }
        return Ok(Outdoor::Constant(t));
    }
    let path = Path::new(value);
    let text = read(path)?;
    let temps = parse_hourly_csv(&text, "temp_f").map_err(|source| CliError::Input {
        path: path.to_owned(),
        source,
    })?;
    Ok(Outdoor::Series(temps))
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}
