//! Discrete output stage: continuous power mapped onto a 20-segment bar.
//!
//! Level 0 is off and level 20 is full capacity, so 21 states drive the
//! 20 indicator segments.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const LEVEL_COUNT: u8 = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct PowerLevel(u8);

impl PowerLevel {
    pub const OFF: PowerLevel = PowerLevel(0);
    pub const FULL: PowerLevel = PowerLevel(LEVEL_COUNT);

    pub fn new(level: u8) -> Result<Self> {
        if level > LEVEL_COUNT {
            return Err(Error::InvalidInput(format!(
                "power level {level} exceeds {LEVEL_COUNT}"
            )));
        }
        Ok(Self(level))
    }

    pub fn get(self) -> u8 {
        self.0
    }
}

impl TryFrom<u8> for PowerLevel {
    type Error = Error;

    fn try_from(level: u8) -> Result<Self> {
        Self::new(level)
    }
}

impl From<PowerLevel> for u8 {
    fn from(level: PowerLevel) -> u8 {
        level.0
    }
}

/// `round(20·p/p_max)` with exact halves rounded up.
pub fn quantize(p: f64, p_max: f64) -> Result<PowerLevel> {
    if !(p_max.is_finite() && p_max > 0.0) {
        return Err(Error::InvalidInput(format!(
            "maximum power must be positive, got {p_max}"
        )));
    }
    if !(p.is_finite() && (0.0..=p_max).contains(&p)) {
        return Err(Error::InvalidInput(format!(
            "power {p} kW outside [0, {p_max}] kW"
        )));
    }
    let scaled = f64::from(LEVEL_COUNT) * p / p_max;
    let level = (scaled + 0.5).floor().min(f64::from(LEVEL_COUNT));
    Ok(PowerLevel(level as u8))
}

pub fn dequantize(level: PowerLevel, p_max: f64) -> f64 {
    f64::from(level.0) / f64::from(LEVEL_COUNT) * p_max
}
