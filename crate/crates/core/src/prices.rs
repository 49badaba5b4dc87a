//! Hourly electricity price series.
//!
//! Prices are held internally in cents/kWh. The canonical on-disk format is a
//! two-column CSV with header `hour,price`, one row per hour starting at 0.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hour of the daily price peak in synthesized series.
pub const SYNTH_PEAK_HOUR: f64 = 17.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PricePoint {
    pub hour_index: usize,
    /// cents/kWh
    pub price: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PriceSeries {
    points: Vec<PricePoint>,
    label: String,
}

impl PriceSeries {
    /// Builds a series from consecutive hourly prices in cents/kWh.
    pub fn from_values(label: impl Into<String>, values: &[f64]) -> Result<Self> {
        for (hour, &price) in values.iter().enumerate() {
            check_price(price).map_err(|msg| Error::InvalidInput(format!("hour {hour}: {msg}")))?;
        }
        Ok(Self {
            points: values
                .iter()
                .enumerate()
                .map(|(hour_index, &price)| PricePoint { hour_index, price })
                .collect(),
            label: label.into(),
        })
    }

    pub fn points(&self) -> &[PricePoint] {
        &self.points
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn values(&self) -> Vec<f64> {
        self.points.iter().map(|p| p.price).collect()
    }

    pub fn price(&self, hour: usize) -> Option<f64> {
        self.points.get(hour).map(|p| p.price)
    }

    /// Multiplies every price by a non-negative factor.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        Self::from_values(
            self.label.clone(),
            &self.values().iter().map(|p| p * factor).collect::<Vec<_>>(),
        )
    }

    /// Canonical CSV text, prices in cents/kWh.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("hour,price\n");
        for p in &self.points {
            out.push_str(&format!("{},{}\n", p.hour_index, p.price));
        }
        out
    }
}

fn check_price(price: f64) -> std::result::Result<(), String> {
    if !price.is_finite() {
        Err(format!("price {price} is not finite"))
    } else if price < 0.0 {
        Err(format!("negative price {price} is not supported"))
    } else {
        Ok(())
    }
}

/// Unit of the price column in an input file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PriceUnit {
    CentsPerKwh,
    DollarsPerMwh,
}

impl PriceUnit {
    /// Converts a price in this unit to cents/kWh.
    pub fn to_cents_per_kwh(self, value: f64) -> f64 {
        match self {
            PriceUnit::CentsPerKwh => value,
            // 1 $/MWh = 100 ¢ / 1000 kWh
            PriceUnit::DollarsPerMwh => value / 10.0,
        }
    }
}

impl FromStr for PriceUnit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cents_per_kwh" | "cents-per-kwh" => Ok(PriceUnit::CentsPerKwh),
            "dollars_per_mwh" | "dollars-per-mwh" => Ok(PriceUnit::DollarsPerMwh),
            other => Err(Error::InvalidInput(format!("unknown price unit {other:?}"))),
        }
    }
}

impl fmt::Display for PriceUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PriceUnit::CentsPerKwh => f.write_str("cents_per_kwh"),
            PriceUnit::DollarsPerMwh => f.write_str("dollars_per_mwh"),
        }
    }
}

/// Reads an `hour,<value_column>` CSV with contiguous hours from 0.
///
/// Values are returned unvalidated beyond being finite numbers.
pub fn parse_hourly_csv(text: &str, value_column: &str) -> Result<Vec<f64>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());

    let headers = reader.headers().map_err(|e| Error::Parse {
        line: 1,
        message: e.to_string(),
    })?;
    if headers.len() != 2 || &headers[0] != "hour" || &headers[1] != value_column {
        return Err(Error::Parse {
            line: 1,
            message: format!(
                "unknown header {:?}, expected \"hour,{value_column}\"",
                headers.iter().collect::<Vec<_>>().join(",")
            ),
        });
    }

    let mut values = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| Error::Parse {
            line: e.position().map_or(0, |p| p.line() as usize),
            message: e.to_string(),
        })?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        if record.iter().all(str::is_empty) {
            continue;
        }
        let parse_err = |message: String| Error::Parse { line, message };
        if record.len() != 2 {
            return Err(parse_err(format!(
                "expected 2 fields, found {}",
                record.len()
            )));
        }
        let hour: usize = record[0]
            .parse()
            .map_err(|_| parse_err(format!("invalid hour {:?}", &record[0])))?;
        let value: f64 = record[1]
            .parse()
            .map_err(|_| parse_err(format!("non-numeric {value_column} {:?}", &record[1])))?;
        if !value.is_finite() {
            return Err(parse_err(format!("{value_column} {value} is not finite")));
        }
        let expected = values.len();
        if hour < expected {
            return Err(parse_err(format!("duplicate hour {hour}")));
        }
        if hour > expected {
            return Err(parse_err(format!("gap at hour {expected}")));
        }
        values.push(value);
    }
    if values.is_empty() {
        return Err(Error::Parse {
            line: 1,
            message: "no data rows".into(),
        });
    }
    Ok(values)
}

/// Parses canonical price CSV, converting to cents/kWh.
pub fn parse_price_csv(text: &str, unit: PriceUnit) -> Result<PriceSeries> {
    let raw = parse_hourly_csv(text, "price")?;
    let mut points = Vec::with_capacity(raw.len());
    for (hour_index, value) in raw.into_iter().enumerate() {
        check_price(value).map_err(|message| Error::Parse {
            line: hour_index + 2,
            message,
        })?;
        points.push(PricePoint {
            hour_index,
            price: unit.to_cents_per_kwh(value),
        });
    }
    Ok(PriceSeries {
        points,
        label: String::new(),
    })
}

/// Diurnal price curve peaking at hour 17 plus seeded uniform noise:
/// `base + amplitude·cos(2π(h − 17)/24) + noise·U(−1, 1)`.
pub fn synthesize_prices(
    seed: u64,
    hours: usize,
    base: f64,
    amplitude: f64,
    noise: f64,
) -> Result<PriceSeries> {
    let finite = base.is_finite() && amplitude.is_finite() && noise.is_finite();
    if !finite || amplitude < 0.0 || noise < 0.0 || base < amplitude + noise {
        return Err(Error::InvalidInput(format!(
            "synthetic prices need base ≥ amplitude + noise with amplitude, noise ≥ 0 \
             (got base={base}, amplitude={amplitude}, noise={noise})"
        )));
    }
    if hours == 0 {
        return Err(Error::InvalidInput(
            "synthetic series needs at least one hour".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let values: Vec<f64> = (0..hours)
        .map(|h| {
            let phase = 2.0 * PI * (h as f64 - SYNTH_PEAK_HOUR) / 24.0;
            let jitter: f64 = rng.gen_range(-1.0..=1.0);
            (base + amplitude * phase.cos() + noise * jitter).max(0.0)
        })
        .collect();
    PriceSeries::from_values("synthetic", &values)
}

/// Contiguous `length`-hour slice starting at `start_hour`, re-indexed from 0.
pub fn validate_window(
    series: &PriceSeries,
    start_hour: usize,
    length: usize,
) -> Result<PriceSeries> {
    if length == 0 {
        return Err(Error::InvalidInput(format!(
            "empty window [{start_hour}, {start_hour})"
        )));
    }
    let end = start_hour + length;
    if end > series.len() {
        let missing_from = start_hour.max(series.len());
        return Err(Error::InvalidInput(format!(
            "price series {:?} covers hours 0..{}, missing hours {missing_from}..{end}",
            series.label,
            series.len()
        )));
    }
    Ok(PriceSeries {
        points: series.points[start_hour..end]
            .iter()
            .enumerate()
            .map(|(hour_index, p)| PricePoint {
                hour_index,
                price: p.price,
            })
            .collect(),
        label: series.label.clone(),
    })
}
