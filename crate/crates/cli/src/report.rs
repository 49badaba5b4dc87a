//! `report.json` and the per-hour CSV tables.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use alm_core::{quantize, Schedule};

use crate::config::RunConfig;
use crate::error::CliError;

pub const SCHEMA_VERSION: u32 = 1;
pub const TRAJECTORY_HEADER: [&str; 5] = ["hour", "price_cents_kwh", "power_kw", "level", "temp_f"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportMode {
    Elastic,
    Inelastic,
    Rolling,
    Compare,
}

/// One hour of a schedule. `temp_f` is the zone temperature at the end of
/// the hour.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HourRow {
    pub hour: usize,
    pub price_cents_kwh: f64,
    pub power_kw: f64,
    pub level: u8,
    pub temp_f: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Parameters {
    pub epsilon: f64,
    pub gamma: f64,
    pub t_min: f64,
    pub t_max: f64,
    pub p_min: f64,
    pub p_max: f64,
    pub horizon: usize,
    pub t_initial: f64,
    pub price_unit: String,
}

impl From<&RunConfig> for Parameters {
    fn from(cfg: &RunConfig) -> Self {
        Self {
            epsilon: cfg.thermal.epsilon(),
            gamma: cfg.thermal.gamma(),
            t_min: cfg.zone.t_min(),
            t_max: cfg.zone.t_max(),
            p_min: cfg.load.p_min(),
            p_max: cfg.load.p_max(),
            horizon: cfg.horizon,
            t_initial: cfg.t_initial,
            price_unit: cfg.price_unit.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub mode: ReportMode,
    pub parameters: Parameters,
    /// Σ price × power over `hours`, cents.
    pub total_cost_cents: f64,
    /// Same total in dollars, one decimal.
    pub total_cost_dollars: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub set_point_f: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub projected_cost_dollars: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub realized_cost_dollars: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub difference_dollars: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub projected_cost_cents: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub realized_cost_cents: Option<f64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub replan_files: Vec<String>,
    pub hours: Vec<HourRow>,
}

impl RunReport {
    pub fn new(mode: ReportMode, cfg: &RunConfig, hours: Vec<HourRow>) -> Self {
        let total_cost_cents = hours.iter().map(|r| r.price_cents_kwh * r.power_kw).sum();
        Self {
            schema_version: SCHEMA_VERSION,
            mode,
            parameters: Parameters::from(cfg),
            total_cost_cents,
            total_cost_dollars: dollars(total_cost_cents),
            set_point_f: None,
            projected_cost_dollars: None,
            realized_cost_dollars: None,
            difference_dollars: None,
            projected_cost_cents: None,
            realized_cost_cents: None,
            replan_files: Vec::new(),
            hours,
        }
    }

    pub fn with_costs(mut self, projected_cents: f64, realized_cents: f64) -> Self {
        self.projected_cost_cents = Some(projected_cents);
        self.realized_cost_cents = Some(realized_cents);
        self.projected_cost_dollars = Some(dollars(projected_cents));
        self.realized_cost_dollars = Some(dollars(realized_cents));
        self.difference_dollars = Some(dollars(realized_cents - projected_cents));
        self
    }
}

/// Cents to dollars rounded to one decimal.
pub fn dollars(cents: f64) -> f64 {
    (cents / 10.0).round() / 10.0
}

/// Rows for a schedule whose hour 0 is absolute hour `first_hour`.
pub fn schedule_rows(
    schedule: &Schedule,
    prices: &[f64],
    first_hour: usize,
    p_max: f64,
) -> Result<Vec<HourRow>, CliError> {
    hour_rows(
        schedule.powers(),
        prices,
        schedule.temps().controlled(),
        first_hour,
        p_max,
    )
}

pub fn hour_rows(
    powers: &[f64],
    prices: &[f64],
    temps_after: &[f64],
    first_hour: usize,
    p_max: f64,
) -> Result<Vec<HourRow>, CliError> {
    powers
        .iter()
        .zip(prices)
        .zip(temps_after)
        .enumerate()
        .map(|(k, ((&power_kw, &price_cents_kwh), &temp_f))| {
            Ok(HourRow {
                hour: first_hour + k,
                price_cents_kwh,
                power_kw,
                level: quantize(power_kw, p_max)?.get(),
                temp_f,
            })
        })
        .collect()
}

pub fn trajectory_csv(rows: &[HourRow]) -> Result<Vec<u8>, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(TRAJECTORY_HEADER)?;
    for r in rows {
        w.write_record([
            r.hour.to_string(),
            r.price_cents_kwh.to_string(),
            r.power_kw.to_string(),
            r.level.to_string(),
            r.temp_f.to_string(),
        ])?;
    }
    w.into_inner().map_err(|e| CliError::Io {
        path: PathBuf::from("trajectory.csv"),
        source: e.into_error(),
    })
}

/// Writes through a temporary sibling and renames it into place.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<(), CliError> {
    let io_err = |source| CliError::Io {
        path: path.to_owned(),
        source,
    };
    let file_name = path
        .file_name()
        .ok_or_else(|| CliError::Usage(format!("{} is not a file path", path.display())))?;
    let tmp = path.with_file_name(format!(".{}.tmp", file_name.to_string_lossy()));
    fs::write(&tmp, contents).map_err(io_err)?;
    fs::rename(&tmp, path).map_err(io_err)
}

pub fn write_report(dir: &Path, report: &RunReport) -> Result<(), CliError> {
    fs::create_dir_all(dir).map_err(|source| CliError::Io {
        path: dir.to_owned(),
        source,
    })?;
    let mut json = serde_json::to_vec_pretty(report)?;
    json.push(b'\n');
    write_atomic(&dir.join("report.json"), &json)?;
    write_atomic(&dir.join("trajectory.csv"), &trajectory_csv(&report.hours)?)
}
