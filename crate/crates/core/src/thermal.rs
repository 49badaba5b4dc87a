//! Zone temperature dynamics.
//!
//! The controller works with the one-hour discrete recursion
//!
//! ```text
//! T(k+1) = ε·T(k) + (1 − ε)·(T_out(k) + γ·P(k))
//! ```
//!
//! where `ε` is the factor of inertia and `γ` converts kW of consumption into
//! °F of equilibrium shift (negative for cooling). The continuous rate form
//! `dT/dt = K₁(T_out − T) − K₂(T − T_d)` is provided on its own; no mapping
//! between the two parametrizations is offered.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficients of the discrete one-hour dynamics.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThermalParams {
    epsilon: f64,
    gamma: f64,
}

impl ThermalParams {
    pub const DEFAULT_EPSILON: f64 = 0.8;
    pub const DEFAULT_GAMMA: f64 = -2.0;

    /// Requires `0 ≤ epsilon < 1` and `gamma < 0` (a cooling load).
    pub fn new(epsilon: f64, gamma: f64) -> Result<Self> {
        if !(epsilon.is_finite() && (0.0..1.0).contains(&epsilon)) {
            return Err(Error::InvalidInput(format!(
                "factor of inertia must lie in [0, 1), got {epsilon}"
            )));
        }
        if !(gamma.is_finite() && gamma < 0.0) {
            return Err(Error::InvalidInput(format!(
                "thermal conversion gamma must be negative for a cooling load, got {gamma}"
            )));
        }
        Ok(Self { epsilon, gamma })
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// °F per kW.
    pub fn gamma(&self) -> f64 {
        self.gamma
    }
}

impl Default for ThermalParams {
    fn default() -> Self {
        Self {
            epsilon: Self::DEFAULT_EPSILON,
            gamma: Self::DEFAULT_GAMMA,
        }
    }
}

/// Coefficients of the continuous-time rate equation, in 1/hour and °F.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ContinuousOdeParams {
    k1: f64,
    k2: f64,
    t_d: f64,
}

impl ContinuousOdeParams {
    pub fn new(k1: f64, k2: f64, t_d: f64) -> Result<Self> {
        if !(k1.is_finite() && k1 >= 0.0 && k2.is_finite() && k2 >= 0.0) {
            return Err(Error::InvalidInput(format!(
                "ODE coupling coefficients must be non-negative, got k1={k1}, k2={k2}"
            )));
        }
        if !t_d.is_finite() {
            return Err(Error::InvalidInput(format!(
                "T_d must be finite, got {t_d}"
            )));
        }
        Ok(Self { k1, k2, t_d })
    }

    pub fn k1(&self) -> f64 {
        self.k1
    }

    pub fn k2(&self) -> f64 {
        self.k2
    }

    pub fn t_d(&self) -> f64 {
        self.t_d
    }
}

/// Zone temperatures over a window; index 0 is the measured initial state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TemperatureTrajectory {
    temps: Vec<f64>,
}

impl TemperatureTrajectory {
    pub fn temps(&self) -> &[f64] {
        &self.temps
    }

    pub fn initial(&self) -> f64 {
        self.temps[0]
    }

    /// Temperatures at the controlled steps `1..=K`.
    pub fn controlled(&self) -> &[f64] {
        &self.temps[1..]
    }

    /// Number of power steps that produced this trajectory.
    pub fn steps(&self) -> usize {
        self.temps.len() - 1
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.temps
    }
}

/// `K₁(T_out − T) − K₂(T − T_d)` in °F/hour.
pub fn continuous_rate(t: f64, t_out: f64, ode: &ContinuousOdeParams) -> f64 {
    ode.k1 * (t_out - t) - ode.k2 * (t - ode.t_d)
}

/// One hour of the discrete dynamics at constant power `p` (kW, expected ≥ 0).
pub fn step_temperature(t_k: f64, p: f64, t_out: f64, params: &ThermalParams) -> f64 {
    params.epsilon * t_k + (1.0 - params.epsilon) * (t_out + params.gamma * p)
}

/// Power that makes `t_set` a fixed point of [`step_temperature`].
///
/// A negative result means the outdoor temperature is below the set point;
/// a cooling load cannot hold it and callers treat the value as infeasible.
pub fn steady_state_power(t_set: f64, t_out: f64, params: &ThermalParams) -> f64 {
    (t_set - t_out) / params.gamma
}

/// Power that moves the zone from `t_from` to exactly `t_to` in one step.
pub(crate) fn power_for_transition(
    t_from: f64,
    t_to: f64,
    t_out: f64,
    params: &ThermalParams,
) -> f64 {
    let equilibrium = (t_to - params.epsilon * t_from) / (1.0 - params.epsilon);
    (equilibrium - t_out) / params.gamma
}

pub fn simulate_trajectory(
    t0: f64,
    powers: &[f64],
    t_out_series: &[f64],
    params: &ThermalParams,
) -> Result<TemperatureTrajectory> {
    if powers.len() != t_out_series.len() {
        return Err(Error::LengthMismatch {
            what: "outdoor temperature series",
            expected: powers.len(),
            found: t_out_series.len(),
        });
    }
    if powers.is_empty() {
        return Err(Error::InvalidInput(
            "trajectory needs at least one power step".into(),
        ));
    }
    let mut temps = Vec::with_capacity(powers.len() + 1);
    temps.push(t0);
    let mut t = t0;
    for (&p, &t_out) in powers.iter().zip(t_out_series) {
        t = step_temperature(t, p, t_out, params);
        temps.push(t);
    }
    Ok(TemperatureTrajectory { temps })
}
