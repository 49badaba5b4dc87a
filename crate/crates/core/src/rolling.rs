//! Receding-horizon operation and day-ahead versus real-time costing.
//!
//! Each simulated hour the controller re-plans a full window: position 0 is
//! priced at the now-known real-time price, positions 1.. at day-ahead
//! forecasts. Only the first step is applied before the window slides on.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::prices::{validate_window, PriceSeries};
use crate::scheduler::{
    cost_of, solve_elastic, ComfortZone, HorizonScenario, LoadSpec, Schedule, DEFAULT_HORIZON,
};
use crate::thermal::{simulate_trajectory, step_temperature, TemperatureTrajectory, ThermalParams};

/// Outdoor temperature, either fixed or hour by hour from hour 0.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Outdoor {
    Constant(f64),
    Series(Vec<f64>),
}

impl Outdoor {
    /// Outdoor temperatures for hours `start..start + len`.
    pub fn window(&self, start: usize, len: usize) -> Result<Vec<f64>> {
        match self {
            Outdoor::Constant(t) => Ok(vec![*t; len]),
            Outdoor::Series(series) => series
                .get(start..start + len)
                .map(<[f64]>::to_vec)
                .ok_or_else(|| {
                    Error::InvalidInput(format!(
                        "outdoor temperature series covers hours 0..{}, need {}..{}",
                        series.len(),
                        start,
                        start + len
                    ))
                }),
        }
    }
}

/// Everything about a window except its prices.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScenarioTemplate {
    pub horizon: usize,
    pub t_initial: f64,
    pub outdoor: Outdoor,
}

impl ScenarioTemplate {
    pub fn new(horizon: usize, t_initial: f64, outdoor: Outdoor) -> Result<Self> {
        if horizon == 0 {
            return Err(Error::InvalidInput(
                "horizon must be at least one step".into(),
            ));
        }
        Ok(Self {
            horizon,
            t_initial,
            outdoor,
        })
    }

    /// 24-hour window at a constant outdoor temperature.
    pub fn daily(t_initial: f64, t_out: f64) -> Self {
        Self {
            horizon: DEFAULT_HORIZON,
            t_initial,
            outdoor: Outdoor::Constant(t_out),
        }
    }

    fn scenario(
        &self,
        start: usize,
        t_initial: f64,
        prices: PriceSeries,
    ) -> Result<HorizonScenario> {
        let t_out = self.outdoor.window(start, prices.len())?;
        HorizonScenario::new(t_initial, t_out, prices)
    }
}

/// Forecast and realized prices over the same hours.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PriceFeed {
    pub day_ahead: PriceSeries,
    pub real_time: PriceSeries,
}

impl PriceFeed {
    pub fn new(day_ahead: PriceSeries, real_time: PriceSeries) -> Self {
        Self {
            day_ahead,
            real_time,
        }
    }

    /// Real-time prices equal to the forecast.
    pub fn perfect(day_ahead: PriceSeries) -> Self {
        let real_time = day_ahead.clone().with_label("real-time");
        Self {
            day_ahead,
            real_time,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RollingResult {
    /// kW actually applied, one per simulated hour.
    pub applied_powers: Vec<f64>,
    pub applied_temps: TemperatureTrajectory,
    /// Full plan produced at each hour.
    pub replans: Vec<Schedule>,
    /// Σ first-step cost at the price each window used, in cents.
    pub projected_cost: f64,
    /// Applied powers priced at real-time prices, in cents.
    pub realized_cost: f64,
}

pub fn run_receding_horizon(
    feed: &PriceFeed,
    template: &ScenarioTemplate,
    zone: &ComfortZone,
    load: &LoadSpec,
    thermal: &ThermalParams,
    sim_hours: usize,
) -> Result<RollingResult> {
    let horizon = template.horizon;
    if sim_hours == 0 {
        return Err(Error::InvalidInput(
            "simulation needs at least one hour".into(),
        ));
    }
    let needed = sim_hours + horizon - 1;
    if feed.day_ahead.len() < needed {
        return Err(Error::InvalidInput(format!(
            "day-ahead series has {} hours, {sim_hours} simulated hours with a {horizon}-hour window need {needed}",
            feed.day_ahead.len()
        )));
    }
    if feed.real_time.len() < sim_hours {
        return Err(Error::InvalidInput(format!(
            "real-time series has {} hours, simulation needs {sim_hours}",
            feed.real_time.len()
        )));
    }
    let t_out_applied = template.outdoor.window(0, sim_hours)?;
    let real_time = feed.real_time.values();

    let mut t = template.t_initial;
    let mut applied_powers = Vec::with_capacity(sim_hours);
    let mut replans = Vec::with_capacity(sim_hours);
    for hour in 0..sim_hours {
        let mut window = vec![real_time[hour]];
        if horizon > 1 {
            window.extend(validate_window(&feed.day_ahead, hour + 1, horizon - 1)?.values());
        }
        let prices = PriceSeries::from_values("window", &window)?;
        let scenario = template.scenario(hour, t, prices)?;
        let plan =
            solve_elastic(&scenario, zone, load, thermal).map_err(|e| Error::WindowInfeasible {
                hour,
                source: Box::new(e),
            })?;
        let p = plan.powers()[0];
        t = step_temperature(t, p, t_out_applied[hour], thermal);
        applied_powers.push(p);
        replans.push(plan);
    }

    let applied_temps =
        simulate_trajectory(template.t_initial, &applied_powers, &t_out_applied, thermal)?;
    let realized_cost = cost_of(&applied_powers, &real_time[..sim_hours])?;
    let projected_cost = replans.iter().map(|plan| plan.step_costs()[0]).sum();
    Ok(RollingResult {
        applied_powers,
        applied_temps,
        replans,
        projected_cost,
        realized_cost,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CostComparison {
    /// Optimum against day-ahead prices.
    pub schedule: Schedule,
    /// cents, at day-ahead prices.
    pub projected_cost: f64,
    /// cents, same powers at real-time prices.
    pub realized_cost: f64,
}

impl CostComparison {
    /// Realized minus projected, in cents.
    pub fn difference(&self) -> f64 {
        self.realized_cost - self.projected_cost
    }
}

/// Plans once against day-ahead prices and prices the plan both ways.
pub fn compare_day_ahead_real_time(
    feed: &PriceFeed,
    template: &ScenarioTemplate,
    zone: &ComfortZone,
    load: &LoadSpec,
    thermal: &ThermalParams,
) -> Result<CostComparison> {
    let horizon = template.horizon;
    let day_ahead = validate_window(&feed.day_ahead, 0, horizon)?;
    let real_time = validate_window(&feed.real_time, 0, horizon)?;
    let scenario = template.scenario(0, template.t_initial, day_ahead)?;
    let schedule = solve_elastic(&scenario, zone, load, thermal)?;
    let projected_cost = schedule.total_cost();
    let realized_cost = cost_of(schedule.powers(), &real_time.values())?;
    Ok(CostComparison {
        schedule,
        projected_cost,
        realized_cost,
    })
}
