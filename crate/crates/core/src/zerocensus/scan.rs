//! Sign-change scan of the rotated real function on the critical line.

use num_complex::Complex64;
use rayon::prelude::*;

use super::counting::predicted_count;
use super::types::{LFunction, ZeroMethod, ZeroRecord};
use crate::error::{Error, Result};
use crate::specfun::{beta_z_complex, hardy_z_complex};

/// Largest height the scanner accepts.
pub const SCAN_CEILING: f64 = 200.0;
/// Default bracketing step; the smallest gap between low zeros exceeds 0.3.
pub const SCAN_STEP: f64 = 0.05;
const BISECT_WIDTH: f64 = 1e-6;
const DIFF_STEP: f64 = 1e-6;

/// e^{iθ(t)} L(1/2 + it); real up to rounding.
pub fn rotated(function: LFunction, t: f64) -> Complex64 {
    match function {
        LFunction::Zeta => hardy_z_complex(t),
        LFunction::Beta => beta_z_complex(t),
    }
}

fn refine(function: LFunction, mut lo: f64, mut hi: f64) -> (f64, f64) {
    let f = |t: f64| rotated(function, t).re;
    let mut flo = f(lo);
    while hi - lo > BISECT_WIDTH {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm == 0.0 {
            lo = mid;
            hi = mid;
            break;
        }
        if (fm > 0.0) == (flo > 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    let (a, b) = (lo - BISECT_WIDTH, hi + BISECT_WIDTH);
    let mut t = 0.5 * (lo + hi);
    for _ in 0..8 {
        let d = (f(t + DIFF_STEP) - f(t - DIFF_STEP)) / (2.0 * DIFF_STEP);
        if d == 0.0 {
            break;
        }
        let next = (t - f(t) / d).clamp(a, b);
        let moved = (next - t).abs();
        t = next;
        if moved < 1e-15 * t.max(1.0) {
            break;
        }
    }
    (t, rotated(function, t).norm())
}

/// All sign changes of the rotated function on (0, t_max] with the given step.
pub fn scan_with_step(function: LFunction, t_max: f64, step: f64) -> Result<Vec<ZeroRecord>> {
    if !(0.0..=SCAN_CEILING).contains(&t_max) {
        return Err(Error::ArgumentDomain(format!("scan height {t_max} outside [0, {SCAN_CEILING}]")));
    }
    if !(step > 0.0) {
        return Err(Error::InvalidParameter(format!("scan step {step}")));
    }
    let n = (t_max / step).ceil() as usize;
    let grid: Vec<f64> = (0..=n).map(|k| (k as f64 * step).min(t_max)).collect();
    let values: Vec<f64> = grid.par_iter().map(|&t| rotated(function, t).re).collect();
    let brackets: Vec<(f64, f64)> = (1..grid.len())
        .filter(|&k| grid[k] > grid[k - 1] && (values[k - 1] > 0.0) != (values[k] > 0.0))
        .map(|k| (grid[k - 1], grid[k]))
        .collect();
    let mut records: Vec<ZeroRecord> = brackets
        .par_iter()
        .map(|&(lo, hi)| {
            let (t, residual) = refine(function, lo, hi);
            ZeroRecord { index: 0, ordinate: t, residual, function, method: ZeroMethod::NewtonRefine }
        })
        .collect();
    records.sort_by(|a, b| a.ordinate.total_cmp(&b.ordinate));
    for (i, r) in records.iter_mut().enumerate() {
        r.index = i + 1;
    }
    Ok(records)
}

/// Zeros with ordinate ≤ t_max, checked against the argument-principle count.
///
/// A mismatch triggers one rescan at half the step before
/// [`Error::MissedZeroSuspected`] is returned.
pub fn scan_zeros(function: LFunction, t_max: f64) -> Result<Vec<ZeroRecord>> {
    let predicted = if t_max < 2.0 { 0 } else { predicted_count(function, t_max)?.round() as i64 };
    let mut step = SCAN_STEP;
    for _ in 0..2 {
        let found = scan_with_step(function, t_max, step)?;
        if found.len() as i64 == predicted {
            return Ok(found);
        }
        if found.len() as i64 > predicted || step < SCAN_STEP {
            let lo = found.last().map_or(0.0, |r| r.ordinate);
            return Err(Error::MissedZeroSuspected { found: found.len(), predicted, t_max, lo, hi: t_max });
        }
        step *= 0.5;
    }
    unreachable!("loop returns on its second pass")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn beta_table() {
        let z = scan_zeros(LFunction::Beta, 17.0).unwrap();
        let want = [6.020_948_904_697_597, 10.243_770_304_166_555, 12.988_098_012_312_423, 16.342_607_104_587_222];
        assert_eq!(z.len(), 4);
        for (r, w) in z.iter().zip(want) {
            assert!((r.ordinate - w).abs() < 1e-10, "{} vs {w}", r.ordinate);
            assert!(r.residual < 1e-9);
        }
    }

    #[test]
    fn zeta_low_heights() {
        let z = scan_zeros(LFunction::Zeta, 15.0).unwrap();
        assert_eq!(z.len(), 1);
        assert!((z[0].ordinate - 14.134_725_141_734_694).abs() < 1e-10);
        assert!(scan_zeros(LFunction::Zeta, 5.0).unwrap().is_empty());
        assert!(scan_zeros(LFunction::Beta, 5.0).unwrap().is_empty());
    }

    #[test]
    fn rejects_large_height() {
        assert!(scan_zeros(LFunction::Zeta, 250.0).is_err());
    }
}
