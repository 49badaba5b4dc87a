//! Fixed workloads shared by the benchmarks.

use alm_core::{
    synthesize_prices, HorizonScenario, LinearProgram, PriceFeed, Relation, ScenarioTemplate,
};

/// A 24-hour scenario on synthetic diurnal prices.
pub fn daily_scenario(seed: u64) -> HorizonScenario {
    let prices = synthesize_prices(seed, 24, 10.0, 5.0, 1.0).expect("valid synthesis parameters");
    HorizonScenario::with_constant_outdoor(75.0, 95.0, prices).expect("valid scenario")
}

/// Two days of forecast and real-time prices.
pub fn two_day_feed(seed: u64) -> (PriceFeed, ScenarioTemplate) {
    let day_ahead =
        synthesize_prices(seed, 48, 10.0, 5.0, 1.0).expect("valid synthesis parameters");
    let real_time =
        synthesize_prices(seed + 1, 48, 12.0, 6.0, 4.0).expect("valid synthesis parameters");
    (
        PriceFeed::new(day_ahead, real_time),
        ScenarioTemplate::daily(75.0, 95.0),
    )
}

/// A dense transportation-style LP with `n` sources and `n` sinks.
pub fn transport_lp(n: usize) -> LinearProgram {
    let cost: Vec<f64> = (0..n * n).map(|k| 1.0 + ((k * 7) % 11) as f64).collect();
    let mut lp = LinearProgram::new(cost);
    for i in 0..n {
        let mut supply = vec![0.0; n * n];
        let mut demand = vec![0.0; n * n];
        for j in 0..n {
            supply[i * n + j] = 1.0;
            demand[j * n + i] = 1.0;
        }
        lp.add_constraint(supply, Relation::LessEq, 10.0 + i as f64);
        lp.add_constraint(demand, Relation::GreaterEq, 8.0);
    }
    lp
}
