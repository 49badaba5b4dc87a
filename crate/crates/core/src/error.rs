use std::fmt;

use crate::scheduler::HorizonScenario;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Which side of the comfort zone could not be respected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComfortLimit {
    /// Even maximum power cannot keep the zone below `t_max`.
    Upper,
    /// Even minimum power drives the zone below `t_min`.
    Lower,
}

impl fmt::Display for ComfortLimit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComfortLimit::Upper => f.write_str("upper comfort limit t_max"),
            ComfortLimit::Lower => f.write_str("lower comfort limit t_min"),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{what}: expected length {expected}, found {found}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("no schedule satisfies comfort zone: {limit} cannot be held at step {step}")]
    NoFeasibleSchedule {
        step: usize,
        limit: ComfortLimit,
        scenario: Box<HorizonScenario>,
    },

    #[error(
        "inelastic set point infeasible at step {step}: requires {required_kw:.3} kW, \
         load range is [{p_min}, {p_max}] kW"
    )]
    SetPointInfeasible {
        step: usize,
        required_kw: f64,
        p_min: f64,
        p_max: f64,
    },

    #[error("re-plan at hour {hour} failed: {source}")]
    WindowInfeasible {
        hour: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors caused by the physical problem having no solution,
    /// as opposed to malformed input.
    pub fn is_infeasible(&self) -> bool {
        match self {
            Error::NoFeasibleSchedule { .. } | Error::SetPointInfeasible { .. } => true,
            Error::WindowInfeasible { source, .. } => source.is_infeasible(),
            _ => false,
        }
    }
}
