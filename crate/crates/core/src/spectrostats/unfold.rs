use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::zerocensus::rvm_main_term;

/// Fewest levels a window may hold.
pub const MIN_WINDOW: usize = 20;

/// Levels rescaled by the smooth counting function so the mean spacing is 1.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UnfoldedSpectrum {
    pub raw: Vec<f64>,
    pub unfolded: Vec<f64>,
    pub window: (f64, f64),
}

impl UnfoldedSpectrum {
    /// Wraps levels that are already on a unit-density scale.
    pub fn from_unfolded(levels: Vec<f64>) -> Self {
        let lo = levels.first().copied().unwrap_or(0.0);
        let hi = levels.last().copied().unwrap_or(0.0);
        UnfoldedSpectrum { raw: levels.clone(), unfolded: levels, window: (lo, hi) }
    }

    pub fn spacings(&self) -> Vec<f64> {
        self.unfolded.windows(2).map(|w| w[1] - w[0]).collect()
    }

    pub fn mean_spacing(&self) -> f64 {
        let s = self.spacings();
        if s.is_empty() {
            return f64::NAN;
        }
        crate::sum::neumaier_sum(s.iter().copied()) / s.len() as f64
    }
}

/// Maps each ordinate in the window through (t/2π) log(t/2π) − t/2π + 7/8.
pub fn unfold(ordinates: &[f64], window: (f64, f64)) -> Result<UnfoldedSpectrum> {
    let mut raw: Vec<f64> = ordinates.iter().copied().filter(|t| *t >= window.0 && *t <= window.1).collect();
    raw.sort_by(f64::total_cmp);
    if raw.len() < MIN_WINDOW {
        return Err(Error::WindowTooSparse { found: raw.len(), needed: MIN_WINDOW });
    }
    let unfolded = raw.iter().map(|&t| rvm_main_term(t)).collect();
    Ok(UnfoldedSpectrum { raw, unfolded, window })
}
