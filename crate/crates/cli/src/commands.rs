use std::fs;

use alm_core::{
    compare_day_ahead_real_time, run_receding_horizon, solve_elastic, solve_inelastic,
    synthesize_prices, validate_window, HorizonScenario, PriceFeed, ScenarioTemplate,
};

use crate::args::{CompareArgs, Mode, OptimizeArgs, RollArgs, SynthArgs};
use crate::config::{read_prices, RunConfig};
use crate::error::CliError;
use crate::report::{
    hour_rows, schedule_rows, trajectory_csv, write_atomic, write_report, ReportMode, RunReport,
};

pub const DEFAULT_OPERATION_NOTICE: &str = "optimized control is not enabled; the load stays \
     under default thermostat operation (pass --enable to run the optimizer)";

/// `None` when `--enable` was not given.
pub fn cmd_optimize(args: &OptimizeArgs) -> Result<Option<RunReport>, CliError> {
    if !args.model.enable {
        return Ok(None);
    }
    let cfg = RunConfig::from_args(&args.model)?;
    if args.mode == Mode::Inelastic && args.t_set.is_none() {
        return Err(CliError::Usage("--mode inelastic requires --t-set".into()));
    }
    let prices = validate_window(&cfg.prices, 0, cfg.horizon)?;
    let t_out = cfg.outdoor.window(0, cfg.horizon)?;
    let scenario = HorizonScenario::new(cfg.t_initial, t_out, prices)?;
    let (schedule, mode, set_point) = match (args.mode, args.t_set) {
        (Mode::Inelastic, Some(t_set)) => (
            solve_inelastic(&scenario, t_set, &cfg.load, &cfg.thermal)?,
            ReportMode::Inelastic,
            Some(t_set),
        ),
        _ => (
            solve_elastic(&scenario, &cfg.zone, &cfg.load, &cfg.thermal)?,
            ReportMode::Elastic,
            None,
        ),
    };
    let rows = schedule_rows(&schedule, &scenario.prices().values(), 0, cfg.load.p_max())?;
    let mut report = RunReport::new(mode, &cfg, rows);
    report.set_point_f = set_point;
    write_report(&cfg.out_dir, &report)?;
    Ok(Some(report))
}

pub fn cmd_roll(args: &RollArgs) -> Result<Option<RunReport>, CliError> {
    if !args.model.enable {
        return Ok(None);
    }
    let cfg = RunConfig::from_args(&args.model)?;
    let real_time = read_prices(&args.rt_prices, cfg.price_unit, "real-time")?;
    let feed = PriceFeed::new(cfg.prices.clone(), real_time);
    let template = ScenarioTemplate::new(cfg.horizon, cfg.t_initial, cfg.outdoor.clone())?;
    let result = run_receding_horizon(
        &feed,
        &template,
        &cfg.zone,
        &cfg.load,
        &cfg.thermal,
        args.sim_hours,
    )?;

    let replan_dir = cfg.out_dir.join("replans");
    fs::create_dir_all(&replan_dir).map_err(|source| CliError::Io {
        path: replan_dir.clone(),
        source,
    })?;
    let mut replan_files = Vec::with_capacity(result.replans.len());
    for (hour, plan) in result.replans.iter().enumerate() {
        // Window prices: the realized price now, forecasts afterwards.
        let mut prices = vec![feed.real_time.points()[hour].price];
        prices.extend(
            feed.day_ahead.points()[hour + 1..hour + cfg.horizon]
                .iter()
                .map(|p| p.price),
        );
        let rows = schedule_rows(plan, &prices, hour, cfg.load.p_max())?;
        let name = format!("hour_{hour:03}.csv");
        write_atomic(&replan_dir.join(&name), &trajectory_csv(&rows)?)?;
        replan_files.push(format!("replans/{name}"));
    }

    let rt = feed.real_time.values();
    let rows = hour_rows(
        &result.applied_powers,
        &rt[..args.sim_hours],
        result.applied_temps.controlled(),
        0,
        cfg.load.p_max(),
    )?;
    let mut report = RunReport::new(ReportMode::Rolling, &cfg, rows)
        .with_costs(result.projected_cost, result.realized_cost);
    report.replan_files = replan_files;
    write_report(&cfg.out_dir, &report)?;
    Ok(Some(report))
}

pub fn cmd_compare(args: &CompareArgs) -> Result<Option<RunReport>, CliError> {
    if !args.model.enable {
        return Ok(None);
    }
    let cfg = RunConfig::from_args(&args.model)?;
    let real_time = read_prices(&args.rt_prices, cfg.price_unit, "real-time")?;
    let feed = PriceFeed::new(cfg.prices.clone(), real_time);
    let template = ScenarioTemplate::new(cfg.horizon, cfg.t_initial, cfg.outdoor.clone())?;
    let cmp = compare_day_ahead_real_time(&feed, &template, &cfg.zone, &cfg.load, &cfg.thermal)?;
    let day_ahead = validate_window(&feed.day_ahead, 0, cfg.horizon)?.values();
    let rows = schedule_rows(&cmp.schedule, &day_ahead, 0, cfg.load.p_max())?;
    let report = RunReport::new(ReportMode::Compare, &cfg, rows)
        .with_costs(cmp.projected_cost, cmp.realized_cost);
    write_report(&cfg.out_dir, &report)?;
    Ok(Some(report))
}

pub fn cmd_synth(args: &SynthArgs) -> Result<(), CliError> {
    let series = synthesize_prices(args.seed, args.hours, args.base, args.amplitude, args.noise)?;
    if let Some(parent) = args.out.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent).map_err(|source| CliError::Io {
            path: parent.to_owned(),
            source,
        })?;
    }
    write_atomic(&args.out, series.to_csv().as_bytes())
}
