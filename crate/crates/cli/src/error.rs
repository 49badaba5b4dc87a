use std::path::PathBuf;

/// Exit code for success.
pub const EXIT_OK: u8 = 0;
/// Exit code for usage, configuration and parse errors.
pub const EXIT_USAGE: u8 = 1;
/// Exit code when no schedule satisfies the constraints.
pub const EXIT_INFEASIBLE: u8 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{}: {source}", path.display())]
    Input {
        path: PathBuf,
        #[source]
        source: alm_core::Error,
    },

    #[error(transparent)]
    Core(#[from] alm_core::Error),

    #[error("cannot serialize report: {0}")]
    Serialize(#[from] serde_json::Error),

    #[error("cannot write CSV: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_infeasible() => EXIT_INFEASIBLE,
            _ => EXIT_USAGE,
        }
    }
}
