//! One look-ahead window: elastic (price-responsive) and inelastic
//! (set-point tracking) consumption schedules.
//!
//! Cost of a step is `price · power · 1 h`, so cents/kWh × kW gives cents.

use serde::{Deserialize, Serialize};

use crate::error::{ComfortLimit, Error, Result};
use crate::lp::{self, LinearProgram, LpSolution, Relation};
use crate::prices::PriceSeries;
use crate::thermal::{
    power_for_transition, simulate_trajectory, steady_state_power, step_temperature,
    TemperatureTrajectory, ThermalParams,
};

/// Allowed mismatch between LP temperatures and re-simulated ones, and
/// allowed comfort-zone overshoot, in °F.
pub const TEMPERATURE_TOLERANCE: f64 = 1e-6;

const POWER_TOLERANCE: f64 = 1e-9;

pub const DEFAULT_HORIZON: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComfortZone {
    t_min: f64,
    t_max: f64,
}

impl ComfortZone {
    pub fn new(t_min: f64, t_max: f64) -> Result<Self> {
        if !(t_min.is_finite() && t_max.is_finite() && t_min < t_max) {
            return Err(Error::InvalidInput(format!(
                "comfort zone needs t_min < t_max, got [{t_min}, {t_max}]"
            )));
        }
        Ok(Self { t_min, t_max })
    }

    pub fn t_min(&self) -> f64 {
        self.t_min
    }

    pub fn t_max(&self) -> f64 {
        self.t_max
    }

    pub fn contains(&self, t: f64, tolerance: f64) -> bool {
        t >= self.t_min - tolerance && t <= self.t_max + tolerance
    }
}

impl Default for ComfortZone {
    fn default() -> Self {
        Self {
            t_min: 70.0,
            t_max: 75.0,
        }
    }
}

/// Consumption range of the load in kW.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LoadSpec {
    p_min: f64,
    p_max: f64,
}

impl LoadSpec {
    pub fn new(p_min: f64, p_max: f64) -> Result<Self> {
        if !(p_min.is_finite() && p_max.is_finite() && 0.0 <= p_min && p_min <= p_max) {
            return Err(Error::InvalidInput(format!(
                "load range needs 0 ≤ p_min ≤ p_max, got [{p_min}, {p_max}]"
            )));
        }
        Ok(Self { p_min, p_max })
    }

    pub fn p_min(&self) -> f64 {
        self.p_min
    }

    pub fn p_max(&self) -> f64 {
        self.p_max
    }
}

impl Default for LoadSpec {
    /// 0–20 kW, the rated capacity of the reference unit.
    fn default() -> Self {
        Self {
            p_min: 0.0,
            p_max: 20.0,
        }
    }
}

/// Inputs for a single optimization window.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HorizonScenario {
    horizon: usize,
    t_initial: f64,
    t_out: Vec<f64>,
    prices: PriceSeries,
}

impl HorizonScenario {
    pub fn new(t_initial: f64, t_out: Vec<f64>, prices: PriceSeries) -> Result<Self> {
        let horizon = prices.len();
        if horizon == 0 {
            return Err(Error::InvalidInput(
                "horizon must be at least one step".into(),
            ));
        }
        if t_out.len() != horizon {
            return Err(Error::LengthMismatch {
                what: "outdoor temperature series",
                expected: horizon,
                found: t_out.len(),
            });
        }
        if !t_initial.is_finite() || t_out.iter().any(|t| !t.is_finite()) {
            return Err(Error::InvalidInput("temperatures must be finite".into()));
        }
        Ok(Self {
            horizon,
            t_initial,
            t_out,
            prices,
        })
    }

    /// Same outdoor temperature at every step.
    pub fn with_constant_outdoor(t_initial: f64, t_out: f64, prices: PriceSeries) -> Result<Self> {
        let t_out = vec![t_out; prices.len()];
        Self::new(t_initial, t_out, prices)
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    pub fn t_initial(&self) -> f64 {
        self.t_initial
    }

    pub fn t_out(&self) -> &[f64] {
        &self.t_out
    }

    pub fn prices(&self) -> &PriceSeries {
        &self.prices
    }
}

/// A costed consumption plan together with the temperatures it produces.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Schedule {
    powers: Vec<f64>,
    temps: TemperatureTrajectory,
    step_costs: Vec<f64>,
    total_cost: f64,
}

impl Schedule {
    /// Simulates and prices `powers` under the scenario's conditions.
    pub fn evaluate(
        scenario: &HorizonScenario,
        powers: Vec<f64>,
        thermal: &ThermalParams,
    ) -> Result<Self> {
        let temps = simulate_trajectory(scenario.t_initial, &powers, &scenario.t_out, thermal)?;
        let prices = scenario.prices.values();
        let step_costs: Vec<f64> = powers.iter().zip(&prices).map(|(p, h)| p * h).collect();
        let total_cost = step_costs.iter().sum();
        Ok(Self {
            powers,
            temps,
            step_costs,
            total_cost,
        })
    }

    /// kW per step.
    pub fn powers(&self) -> &[f64] {
        &self.powers
    }

    pub fn temps(&self) -> &TemperatureTrajectory {
        &self.temps
    }

    /// cents per step.
    pub fn step_costs(&self) -> &[f64] {
        &self.step_costs
    }

    /// cents
    pub fn total_cost(&self) -> f64 {
        self.total_cost
    }
}

/// Σ price·power over one-hour steps, in cents.
pub fn cost_of(powers: &[f64], prices: &[f64]) -> Result<f64> {
    if powers.len() != prices.len() {
        return Err(Error::LengthMismatch {
            what: "price series",
            expected: powers.len(),
            found: prices.len(),
        });
    }
    Ok(powers.iter().zip(prices).map(|(p, h)| p * h).sum())
}

/// Index of the power variable for step `k` in the elastic program.
pub fn power_var(k: usize) -> usize {
    k
}

/// Index of the temperature variable `T(k)`, `1 ≤ k ≤ horizon`.
pub fn temp_var(horizon: usize, k: usize) -> usize {
    horizon + k - 1
}

/// Elastic program over `P(0..K)` and `T(1..=K)`.
///
/// Each step contributes the equality row
/// `ε·T(k) + (1−ε)γ·P(k) − T(k+1) = −(1−ε)·T_out(k)`, with the measured
/// `T(0)` moved to the right-hand side of the first row.
pub fn build_elastic_lp(
    scenario: &HorizonScenario,
    zone: &ComfortZone,
    load: &LoadSpec,
    thermal: &ThermalParams,
) -> LinearProgram {
    let k_len = scenario.horizon;
    let n = 2 * k_len;
    let eps = thermal.epsilon();
    let gain = (1.0 - eps) * thermal.gamma();

    let mut objective = vec![0.0; n];
    for (k, price) in scenario.prices.values().into_iter().enumerate() {
        objective[power_var(k)] = price;
    }
    let mut lp = LinearProgram::new(objective);

    for k in 0..k_len {
        let mut row = vec![0.0; n];
        let mut rhs = -(1.0 - eps) * scenario.t_out[k];
        if k == 0 {
            rhs -= eps * scenario.t_initial;
        } else {
            row[temp_var(k_len, k)] = eps;
        }
        row[power_var(k)] = gain;
        row[temp_var(k_len, k + 1)] = -1.0;
        lp.add_constraint(row, Relation::Equal, rhs);
    }
    for k in 0..k_len {
        lp.set_bound(power_var(k), load.p_min(), load.p_max());
        lp.set_bound(temp_var(k_len, k + 1), zone.t_min(), zone.t_max());
    }
    lp
}

/// Finds the first step at which no admissible power keeps the zone
/// temperature reachable inside the comfort band.
fn first_unreachable_step(
    scenario: &HorizonScenario,
    zone: &ComfortZone,
    load: &LoadSpec,
    thermal: &ThermalParams,
) -> Option<(usize, ComfortLimit)> {
    // Reachable temperatures form an interval because the dynamics are
    // monotone in both state and power.
    let (mut lo, mut hi) = (scenario.t_initial, scenario.t_initial);
    for (k, &t_out) in scenario.t_out.iter().enumerate() {
        let coolest = step_temperature(lo, load.p_max(), t_out, thermal);
        let warmest = step_temperature(hi, load.p_min(), t_out, thermal);
        if coolest > zone.t_max() + lp::TOLERANCE {
            return Some((k, ComfortLimit::Upper));
        }
        if warmest < zone.t_min() - lp::TOLERANCE {
            return Some((k, ComfortLimit::Lower));
        }
        lo = coolest.max(zone.t_min());
        hi = warmest.min(zone.t_max());
    }
    None
}

/// Cost-minimal schedule against the scenario's prices inside the comfort zone.
pub fn solve_elastic(
    scenario: &HorizonScenario,
    zone: &ComfortZone,
    load: &LoadSpec,
    thermal: &ThermalParams,
) -> Result<Schedule> {
    let program = build_elastic_lp(scenario, zone, load, thermal);
    let x = match lp::solve(&program)? {
        LpSolution::Optimal { x, .. } => x,
        LpSolution::Infeasible => {
            return match first_unreachable_step(scenario, zone, load, thermal) {
                Some((step, limit)) => Err(Error::NoFeasibleSchedule {
                    step,
                    limit,
                    scenario: Box::new(scenario.clone()),
                }),
                None => Err(Error::Internal(
                    "LP reported infeasible but the comfort band is reachable".into(),
                )),
            };
        }
        LpSolution::Unbounded => {
            debug_assert!(false, "bounded powers cannot give an unbounded program");
            return Err(Error::Internal("elastic program reported unbounded".into()));
        }
    };

    let k_len = scenario.horizon;
    let powers: Vec<f64> = (0..k_len)
        .map(|k| x[power_var(k)].clamp(load.p_min(), load.p_max()))
        .collect();
    let schedule = Schedule::evaluate(scenario, powers, thermal)?;

    for k in 1..=k_len {
        let simulated = schedule.temps.temps()[k];
        let planned = x[temp_var(k_len, k)];
        if (simulated - planned).abs() > TEMPERATURE_TOLERANCE {
            return Err(Error::Internal(format!(
                "LP temperature {planned} at step {k} disagrees with simulation {simulated}"
            )));
        }
        if !zone.contains(simulated, TEMPERATURE_TOLERANCE) {
            return Err(Error::Internal(format!(
                "optimal schedule leaves the comfort zone at step {k}: {simulated} °F"
            )));
        }
    }
    Ok(schedule)
}

/// Set-point tracking schedule: the first step moves the zone to `t_set`
/// exactly and every following step holds it. The comfort zone plays no
/// role here.
pub fn solve_inelastic(
    scenario: &HorizonScenario,
    t_set: f64,
    load: &LoadSpec,
    thermal: &ThermalParams,
) -> Result<Schedule> {
    if !t_set.is_finite() {
        return Err(Error::InvalidInput(format!(
            "set point {t_set} is not finite"
        )));
    }
    let mut powers = Vec::with_capacity(scenario.horizon);
    for (step, &t_out) in scenario.t_out.iter().enumerate() {
        let required = if step == 0 {
            power_for_transition(scenario.t_initial, t_set, t_out, thermal)
        } else {
            steady_state_power(t_set, t_out, thermal)
        };
        if required < load.p_min() - POWER_TOLERANCE || required > load.p_max() + POWER_TOLERANCE {
            return Err(Error::SetPointInfeasible {
                step,
                required_kw: required,
                p_min: load.p_min(),
                p_max: load.p_max(),
            });
        }
        powers.push(required.clamp(load.p_min(), load.p_max()));
    }
    Schedule::evaluate(scenario, powers, thermal)
}
