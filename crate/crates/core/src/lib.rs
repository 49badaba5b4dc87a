//! Adaptive load management with predictive control.
//!
//! Schedules the hourly consumption of a thermostatically controlled cooling
//! load so that electricity cost against a forecast price series is minimal
//! while the zone temperature stays inside a user comfort zone. The building
//! blocks are:
//!
//! - [`thermal`]: first-order zone temperature dynamics,
//! - [`lp`]: a dense two-phase simplex solver,
//! - [`scheduler`]: elastic (price-responsive) and inelastic (set-point) schedules,
//! - [`rolling`]: hourly receding-horizon re-planning and day-ahead/real-time costing,
//! - [`prices`]: hourly price series ingestion and synthesis,
//! - [`levels`]: the 20-level discrete output stage.

pub mod error;
pub mod levels;
pub mod lp;
pub mod prices;
pub mod rolling;
pub mod scheduler;
pub mod thermal;

pub use error::{ComfortLimit, Error, Result};
pub use levels::{dequantize, quantize, PowerLevel, LEVEL_COUNT};
pub use lp::{Bound, Constraint, LinearProgram, LpSolution, LpStatus, Relation};
pub use prices::{
    parse_price_csv, synthesize_prices, validate_window, PricePoint, PriceSeries, PriceUnit,
};
pub use rolling::{
    compare_day_ahead_real_time, run_receding_horizon, CostComparison, Outdoor, PriceFeed,
    RollingResult, ScenarioTemplate,
};
pub use scheduler::{
    build_elastic_lp, cost_of, solve_elastic, solve_inelastic, ComfortZone, HorizonScenario,
    LoadSpec, Schedule,
};
pub use thermal::{
    continuous_rate, simulate_trajectory, steady_state_power, step_temperature,
    ContinuousOdeParams, TemperatureTrajectory, ThermalParams,
};
