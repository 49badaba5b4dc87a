use alm_core::{
    compare_day_ahead_real_time, run_receding_horizon, solve_elastic, synthesize_prices,
    validate_window, ComfortZone, HorizonScenario, LoadSpec, PriceFeed, PriceSeries,
    ScenarioTemplate, ThermalParams,
};
use proptest::prelude::*;

fn defaults() -> (ComfortZone, LoadSpec, ThermalParams) {
    (
        ComfortZone::default(),
        LoadSpec::default(),
        ThermalParams::default(),
    )
}

fn one_shot_cost(series: &PriceSeries, t0: f64, t_out: f64) -> f64 {
    let (zone, load, thermal) = defaults();
    let window = validate_window(series, 0, 24).unwrap();
    let sc = HorizonScenario::with_constant_outdoor(t0, t_out, window).unwrap();
    solve_elastic(&sc, &zone, &load, &thermal)
        .unwrap()
        .total_cost()
}

#[test]
fn perfect_forecast_matches_one_shot_plan() {
    let (zone, load, thermal) = defaults();
    for seed in 0..50u64 {
        let series = synthesize_prices(seed, 48, 10.0, 5.0, 1.0).unwrap();
        let feed = PriceFeed::perfect(series.clone());
        let template = ScenarioTemplate::daily(75.0, 95.0);
        let r = run_receding_horizon(&feed, &template, &zone, &load, &thermal, 24).unwrap();
        let one_shot = one_shot_cost(&series, 75.0, 95.0);
        assert!(
            (r.realized_cost - one_shot).abs() <= 1e-6 * (1.0 + one_shot),
            "seed {seed}: rolling {} one-shot {one_shot}",
            r.realized_cost
        );
        for &t in r.applied_temps.controlled() {
            assert!(zone.contains(t, 1e-6));
        }
    }
}

#[test]
fn forecast_error_keeps_comfort() {
    let (zone, load, thermal) = defaults();
    for seed in 0..10u64 {
        let da = synthesize_prices(seed, 60, 10.0, 5.0, 1.0).unwrap();
        let rt = synthesize_prices(seed + 1000, 60, 12.0, 8.0, 4.0).unwrap();
        let template = ScenarioTemplate::daily(72.0, 97.0);
        let r = run_receding_horizon(
            &PriceFeed::new(da, rt),
            &template,
            &zone,
            &load,
            &thermal,
            36,
        )
        .unwrap();
        assert_eq!(r.applied_powers.len(), 36);
        for &t in r.applied_temps.controlled() {
            assert!(zone.contains(t, 1e-6), "seed {seed}: {t}");
        }
    }
}

#[test]
fn single_hour_is_first_step_of_one_solve() {
    let (zone, load, thermal) = defaults();
    let series = synthesize_prices(11, 24, 10.0, 5.0, 1.0).unwrap();
    let template = ScenarioTemplate::daily(74.0, 95.0);
    let r = run_receding_horizon(
        &PriceFeed::perfect(series.clone()),
        &template,
        &zone,
        &load,
        &thermal,
        1,
    )
    .unwrap();
    let sc = HorizonScenario::with_constant_outdoor(74.0, 95.0, series).unwrap();
    let s = solve_elastic(&sc, &zone, &load, &thermal).unwrap();
    assert_eq!(r.applied_powers, vec![s.powers()[0]]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn comparison_is_linear_in_real_time_prices(
        seed in any::<u64>(),
        a in 0.0f64..3.0,
        b in 0.0f64..3.0,
    ) {
        let (zone, load, thermal) = defaults();
        let da = synthesize_prices(seed, 24, 10.0, 5.0, 1.0).unwrap();
        let r1 = synthesize_prices(seed ^ 1, 24, 10.0, 6.0, 3.0).unwrap();
        let r2 = synthesize_prices(seed ^ 2, 24, 8.0, 2.0, 3.0).unwrap();
        let mix: Vec<f64> = r1.values().iter().zip(r2.values()).map(|(x, y)| a * x + b * y).collect();
        let mix = PriceSeries::from_values("mix", &mix).unwrap();
        let template = ScenarioTemplate::daily(75.0, 95.0);
        let run = |rt: &PriceSeries| {
            compare_day_ahead_real_time(&PriceFeed::new(da.clone(), rt.clone()), &template, &zone, &load, &thermal)
                .unwrap()
        };
        let (c1, c2, cm) = (run(&r1), run(&r2), run(&mix));
        prop_assert_eq!(c1.projected_cost, cm.projected_cost);
        let combined = a * c1.realized_cost + b * c2.realized_cost;
        prop_assert!((cm.realized_cost - combined).abs() <= 1e-9 * (1.0 + combined));
    }
}
