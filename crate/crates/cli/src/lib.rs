//! Command-line front end: load prices, run the optimizer or a rolling
//! simulation, write `report.json` and `trajectory.csv`.

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod report;

pub use args::Cli;
pub use error::{CliError, EXIT_INFEASIBLE, EXIT_OK, EXIT_USAGE};
pub use report::{ReportMode, RunReport};

use args::Command;

/// Runs a parsed command and returns the line to print on success.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let report = match &cli.command {
        Command::Optimize(a) => commands::cmd_optimize(a)?.map(|r| (r, &a.model.out)),
        Command::Roll(a) => commands::cmd_roll(a)?.map(|r| (r, &a.model.out)),
        Command::Compare(a) => commands::cmd_compare(a)?.map(|r| (r, &a.model.out)),
        Command::Synth(a) => {
            commands::cmd_synth(a)?;
            return Ok(format!("wrote {} hours to {}", a.hours, a.out.display()));
        }
    };
    let Some((report, out)) = report else {
        return Ok(commands::DEFAULT_OPERATION_NOTICE.to_string());
    };
    let mut line = format!(
        "{:?} run: total cost ${:.1} over {} hours",
        report.mode,
        report.total_cost_dollars,
        report.hours.len()
    )
    .to_lowercase();
    if let (Some(p), Some(r)) = (report.projected_cost_dollars, report.realized_cost_dollars) {
        line.push_str(&format!("; projected ${p:.1}, realized ${r:.1}"));
    }
    line.push_str(&format!("; report in {}", out.display()));
    Ok(line)
}
