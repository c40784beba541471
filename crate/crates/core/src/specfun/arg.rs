//! Continuous argument tracking along straight-line paths.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::gamma::{gamma_unchecked, pole_distance};
use crate::error::{Error, Result};

/// Accepted phase change per step; larger steps are bisected.
const MAX_STEP_PHASE: f64 = PI / 2.0;
/// Agreement required between one step and its two halves.
const HALF_STEP_AGREEMENT: f64 = 1e-6;
const MIN_STEP: f64 = 1e-12;

/// Accumulates arg f(s) continuously along a polygonal path.
///
/// The path starts at s = 2 with argument 0, where ζ and Γ are both real and
/// positive. Every accepted step changes the phase by less than π/2 and agrees
/// with its two half steps, which rules out a silent wrap by 2π.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ArgTracker {
    pub path: Vec<Complex64>,
    pub accumulated_arg: f64,
    #[serde(skip)]
    last_value: Option<Complex64>,
    /// Initial step length used when advancing.
    pub step: f64,
}

impl Default for ArgTracker {
    fn default() -> Self {
        Self::new()
    }
}

fn wrap(x: f64) -> f64 {
    let mut y = x % (2.0 * PI);
    if y > PI {
        y -= 2.0 * PI;
    } else if y <= -PI {
        y += 2.0 * PI;
    }
    y
}

impl ArgTracker {
    pub fn new() -> Self {
        Self::starting_at(Complex64::new(2.0, 0.0), 0.0)
    }

    pub fn starting_at(s: Complex64, arg: f64) -> Self {
        ArgTracker { path: vec![s], accumulated_arg: arg, last_value: None, step: 0.25 }
    }

    pub fn current(&self) -> Complex64 {
        *self.path.last().expect("tracker path is never empty")
    }

    /// Walks in a straight line to `target`, accumulating arg f.
    pub fn advance<F>(&mut self, f: &F, target: Complex64) -> Result<f64>
    where
        F: Fn(Complex64) -> Result<Complex64>,
    {
        let start = self.current();
        let mut f0 = match self.last_value {
            Some(v) => v,
            None => f(start)?,
        };
        let total = (target - start).norm();
        if total == 0.0 {
            self.last_value = Some(f0);
            return Ok(self.accumulated_arg);
        }
        let dir = (target - start) / total;
        let mut done = 0.0;
        let mut h = self.step.min(total);
        while done < total {
            h = h.min(total - done);
            let z0 = start + dir * done;
            let z1 = if done + h >= total { target } else { start + dir * (done + h) };
            let zm = start + dir * (done + 0.5 * h);
            let f1 = f(z1)?;
            let fm = f(zm)?;
            let d = wrap((f1 / f0).arg());
            let d1 = wrap((fm / f0).arg());
            let d2 = wrap((f1 / fm).arg());
            if d.abs() < MAX_STEP_PHASE && (d1 + d2 - d).abs() < HALF_STEP_AGREEMENT {
                self.accumulated_arg += d;
                self.path.push(z1);
                f0 = f1;
                done += h;
                h *= 1.5;
            } else {
                h *= 0.5;
                if h < MIN_STEP {
                    return Err(Error::BranchJump { from: z0, to: z1, delta: d });
                }
            }
        }
        self.last_value = Some(f0);
        Ok(self.accumulated_arg)
    }
}

/// log Γ(s) with its imaginary part obtained by continuous variation along
/// the tracker path from the tracker's current point to `s`.
pub fn log_gamma_continuous(s: Complex64, tracker: &mut ArgTracker) -> Result<Complex64> {
    let d = pole_distance(s);
    if d < 1e-12 {
        return Err(Error::PoleProximity { at: s, distance: d });
    }
    let g = |z: Complex64| -> Result<Complex64> {
        let d = pole_distance(z);
        if d < 1e-12 {
            return Err(Error::PoleProximity { at: z, distance: d });
        }
        Ok(gamma_unchecked(z))
    };
    let arg = tracker.advance(&g, s)?;
    let modulus = super::gamma::ln_gamma_unchecked(s).re;
    Ok(Complex64::new(modulus, arg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::gamma::ln_gamma;

    #[test]
    fn fresh_tracker_at_two_is_zero() {
        let mut t = ArgTracker::new();
        let v = log_gamma_continuous(Complex64::new(2.0, 0.0), &mut t).unwrap();
        assert!(v.norm() < 1e-15);
    }

    #[test]
    fn tracks_arg_gamma_up_the_line() {
        let mut t = ArgTracker::new();
        let target = Complex64::new(2.0, 10.0);
        for k in 1..=100 {
            let s = Complex64::new(2.0, 0.1 * k as f64);
            log_gamma_continuous(s, &mut t).unwrap();
        }
        let v = log_gamma_continuous(target, &mut t).unwrap();
        let oracle = ln_gamma(target).unwrap();
        assert!((v - oracle).norm() < 1e-11, "{v} vs {oracle}");
        // well past a single 2π wrap
        assert!(v.im > 2.0 * PI);
    }
}
