//! Counting functions: Riemann–von Mangoldt, S(t) and the N_H expression.

use std::f64::consts::{E, PI};

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::catalog::Catalog;
use super::types::LFunction;
use crate::audit::{AuditReport, Verdict};
use crate::error::{Error, Result};
use crate::specfun::{
    beta_theta, dirichlet_beta, log_gamma_continuous, riemann_siegel_theta, zeta, ArgTracker,
};

/// Constant c in the reported remainder bound |R(T)| ≤ c/T.
pub const REMAINDER_CONSTANT: f64 = 1.0;

/// One evaluation of N(T) = main + S(T) + R(T).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CountingReport {
    pub t: f64,
    pub main_term: f64,
    pub s_term: f64,
    pub total: f64,
    /// Number of catalogued ordinates ≤ t.
    pub jump_count: usize,
    /// Reported bound on the omitted remainder.
    pub remainder_bound: f64,
}

impl CountingReport {
    pub fn consistent(&self) -> bool {
        (self.total - self.jump_count as f64).abs() < 0.5
    }
}

fn l_value(function: LFunction, s: Complex64) -> Result<Complex64> {
    match function {
        LFunction::Zeta => zeta(s),
        LFunction::Beta => dirichlet_beta(s),
    }
}

/// (1/π) arg L(1/2 + it), the argument carried continuously along
/// 2 → 2 + it → 1/2 + it starting from arg L(2) = 0.
///
/// On Re s = 2 both ζ and β have positive real part, so the principal
/// argument there already equals the continuous one; only the horizontal
/// leg needs tracking.
pub fn s_of_t(function: LFunction, t: f64) -> Result<f64> {
    let corner = Complex64::new(2.0, t);
    let start = l_value(function, corner)?.arg();
    let mut tracker = ArgTracker::starting_at(corner, start);
    tracker.step = 0.1;
    let arg = tracker.advance(&|s| l_value(function, s), Complex64::new(0.5, t))?;
    Ok(arg / PI)
}

/// S on a grid, evaluated in parallel and returned in grid order.
pub fn s_grid(function: LFunction, ts: &[f64]) -> Result<Vec<f64>> {
    ts.par_iter().map(|&t| s_of_t(function, t)).collect()
}

/// (T/2π) log(T/2π) − T/2π + 7/8
pub fn rvm_main_term(t: f64) -> f64 {
    let x = t / (2.0 * PI);
    x * x.ln() - x + 0.875
}

/// Exact smooth part plus S: θ(T)/π + 1 + S(T) for ζ, θ_β(T)/π + S_β(T) for β.
pub fn predicted_count(function: LFunction, t: f64) -> Result<f64> {
    let smooth = match function {
        LFunction::Zeta => riemann_siegel_theta(t) / PI + 1.0,
        LFunction::Beta => beta_theta(t) / PI,
    };
    Ok(smooth + s_of_t(function, t)?)
}

/// Riemann–von Mangoldt at height T with the jump count read from `catalog`.
pub fn riemann_von_mangoldt(t: f64, catalog: &Catalog) -> Result<CountingReport> {
    if !(t >= 2.0) {
        return Err(Error::ArgumentDomain(format!("counting needs T >= 2, got {t}")));
    }
    if catalog.function != LFunction::Zeta {
        return Err(Error::InvalidParameter("Riemann–von Mangoldt applies to the ζ catalog".into()));
    }
    if catalog.coverage() < t {
        return Err(Error::IncompleteCatalog { covered: catalog.coverage(), required: t });
    }
    let main_term = rvm_main_term(t);
    let s_term = s_of_t(LFunction::Zeta, t)?;
    Ok(CountingReport {
        t,
        main_term,
        s_term,
        total: main_term + s_term,
        jump_count: catalog.count_up_to(t),
        remainder_bound: REMAINDER_CONSTANT / t,
    })
}

/// 0.1038 log t + 0.2573 log log t + 8.3675
pub fn s_bound(t: f64) -> f64 {
    0.1038 * t.ln() + 0.2573 * t.ln().ln() + 8.3675
}

/// Checks |S(t)| against [`s_bound`] on the 0.1-spaced grid e, e + 0.1, … ≤ T.
pub fn s_of_t_bound_check(t_max: f64) -> AuditReport {
    let id = "s_of_t_bound";
    if !(t_max >= E) {
        return AuditReport::with_verdict(id, Complex64::new(f64::NAN, 0.0), Complex64::new(f64::NAN, 0.0), 0.0, Verdict::Inconclusive)
            .note(format!("grid needs T >= e, got {t_max}"));
    }
    let n = ((t_max - E) / 0.1).floor() as usize;
    let ts: Vec<f64> = (0..=n).map(|k| E + 0.1 * k as f64).collect();
    let values = match s_grid(LFunction::Zeta, &ts) {
        Ok(v) => v,
        Err(e) => {
            return AuditReport::with_verdict(id, Complex64::new(f64::NAN, 0.0), Complex64::new(f64::NAN, 0.0), 0.0, Verdict::Inconclusive)
                .note(format!("argument tracking failed: {e}"))
        }
    };
    let mut worst = (0usize, f64::NEG_INFINITY);
    let mut max_abs = 0.0f64;
    let mut violations = 0usize;
    for (k, (&t, &s)) in ts.iter().zip(&values).enumerate() {
        let ratio = s.abs() / s_bound(t);
        if ratio > worst.1 {
            worst = (k, ratio);
        }
        max_abs = max_abs.max(s.abs());
        if s.abs() > s_bound(t) {
            violations += 1;
        }
    }
    let tw = ts[worst.0];
    let verdict = if violations == 0 { Verdict::Pass } else { Verdict::Fail };
    AuditReport::with_verdict(id, Complex64::new(values[worst.0].abs(), 0.0), Complex64::new(s_bound(tw), 0.0), 0.0, verdict).note(format!(
        "{} grid points on [e, {t_max}]; max |S| = {max_abs:.6}; tightest at t = {tw:.1} (ratio {:.4}); {violations} violations",
        ts.len(),
        worst.1
    ))
}

/// (1/π) arg Γ(1/4 + iE/4) − (E/2π)(log π − log(E/2e)) − (1/π) arg ζ(1/2 + iE/2),
/// with both arguments tracked continuously.
pub fn n_h_guinand_weil(energy: f64) -> Result<f64> {
    if !(energy >= 4.0) {
        return Err(Error::ArgumentDomain(format!("N_H expression needs E >= 4, got {energy}")));
    }
    let mut tracker = ArgTracker::starting_at(Complex64::new(0.25, 0.0), 0.0);
    let lg = log_gamma_continuous(Complex64::new(0.25, energy / 4.0), &mut tracker)?;
    let x = energy / (2.0 * PI);
    let middle = -x * (PI.ln() - (energy / (2.0 * E)).ln());
    Ok(lg.im / PI + middle - s_of_t(LFunction::Zeta, energy / 2.0)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s_matches_oracle() {
        for (t, want) in [(2.0, -0.195_977_582_921_242_7), (100.0, -0.002_409_902_271_816_78), (50.5, 0.411_635_034_087_049_6)] {
            let s = s_of_t(LFunction::Zeta, t).unwrap();
            assert!((s - want).abs() < 1e-10, "S({t}) = {s}");
        }
    }

    #[test]
    fn predicted_counts() {
        assert!((predicted_count(LFunction::Zeta, 50.0).unwrap() - 10.0).abs() < 0.1);
        assert!((predicted_count(LFunction::Beta, 17.0).unwrap() - 4.0).abs() < 0.1);
        assert!((predicted_count(LFunction::Zeta, 200.0).unwrap() - 79.0).abs() < 0.1);
    }

    #[test]
    fn guinand_weil_frozen_values() {
        for (e, want) in [(20.0, 1.371_802_724_576_329_3), (28.369_450_283_4, 3.787_872_409_997_791_7), (60.0, 20.593_818_251_435_145)] {
            let v = n_h_guinand_weil(e).unwrap();
            assert!((v - want).abs() < 1e-9, "N_H({e}) = {v}");
        }
    }

    #[test]
    fn bound_endpoint() {
        assert!((s_bound(E) - (0.1038 + 8.3675)).abs() < 1e-15);
    }
}
