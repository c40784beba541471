//! Newton iteration for roots of the filter in the energy variable.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::contour::{line_integral, ContourSpec, RindlerScale};
use super::kernel::Kernel;
use crate::bessel::SpectralParameter;
use crate::complex::Precision;
use crate::error::{Error, Result};
use crate::zerocensus::{LFunction, ZeroMethod, ZeroRecord};

pub const MAX_ITERATIONS: usize = 50;
/// Iterates may not wander further than this from the starting guess.
pub const BASIN_RADIUS: f64 = 1.0;
/// Largest |Im E| accepted as a real root.
pub const REAL_ROOT_TOLERANCE: f64 = 1e-8;

/// A converged root E of ψ(E) = 0. The record stores E/2 as the ordinate.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FilterRoot {
    pub energy: Complex64,
    pub record: ZeroRecord,
    pub iterations: usize,
    /// |ψ(E)| divided by the integrated modulus of the integrand.
    pub relative_residual: f64,
    pub precision: Precision,
}

/// Runs complex Newton from `guess` and reports the root wherever it lands.
///
/// Returns [`Error::NonRealRoot`] when the limit is off the real axis,
/// [`Error::BasinEscape`] when an iterate leaves the unit disc around the
/// guess and [`Error::NoConvergence`] after [`MAX_ITERATIONS`] steps.
pub fn newton_filter_root(
    kernel: Kernel,
    scale: RindlerScale,
    contour: &ContourSpec,
    guess: f64,
) -> Result<FilterRoot> {
    let root = newton_complex(kernel, scale, contour, guess)?;
    if root.energy.im.abs() > REAL_ROOT_TOLERANCE {
        return Err(Error::NonRealRoot(root.energy));
    }
    Ok(root)
}

/// Same iteration without the real-axis check.
pub fn newton_complex(
    kernel: Kernel,
    scale: RindlerScale,
    contour: &ContourSpec,
    guess: f64,
) -> Result<FilterRoot> {
    let small = match contour.precision {
        Precision::Double => 1e-9,
        Precision::DoubleDouble => 1e-11,
    };
    let mut e = Complex64::new(guess, 0.0);
    for it in 1..=MAX_ITERATIONS {
        let nu = SpectralParameter::from_complex_energy(e);
        let r = line_integral(kernel, nu, scale, contour, true)?;
        if r.derivative.norm() == 0.0 || !r.derivative.is_finite() {
            return Err(Error::DerivativeVanishes(e));
        }
        let step = r.value / r.derivative;
        let rel = r.value.norm() / r.l1.max(f64::MIN_POSITIVE);
        let converged = step.norm() <= 1e-12 * e.norm().max(1.0) && (r.value.norm() < small || rel < small);
        if converged {
            return Ok(finish(kernel, e, it, r.value.norm(), rel, contour.precision));
        }
        e -= step;
        if (e - guess).norm() > BASIN_RADIUS || !e.is_finite() {
            return Err(Error::BasinEscape { guess, at: e });
        }
    }
    Err(Error::NoConvergence(format!("filter Newton from {guess} did not settle in {MAX_ITERATIONS} steps")))
}

fn finish(kernel: Kernel, e: Complex64, iterations: usize, residual: f64, rel: f64, precision: Precision) -> FilterRoot {
    let function = match kernel {
        Kernel::Beta2s => LFunction::Beta,
        _ => LFunction::Zeta,
    };
    FilterRoot {
        energy: e,
        record: ZeroRecord { index: 0, ordinate: 0.5 * e.re, residual, function, method: ZeroMethod::FilterRoot },
        iterations,
        relative_residual: rel,
        precision,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_guess_lands_off_axis() {
        // the β filter at E = 2γ has no root there; the iteration walks into the plane
        let s = RindlerScale::new(0.2).unwrap();
        let c = ContourSpec::new(0.75);
        match newton_filter_root(Kernel::Beta2s, s, &c, 20.487_540_608) {
            Err(Error::NonRealRoot(z)) => assert!(z.im.abs() > 0.1),
            Err(Error::BasinEscape { .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn derivative_matches_difference_quotient() {
        let s = RindlerScale::new(0.2).unwrap();
        let c = ContourSpec::new(0.6);
        let e = 10.0;
        let h = 1e-4;
        let f = |x: f64| line_integral(Kernel::Zeta2s, SpectralParameter::from_complex_energy(Complex64::new(x, 0.0)), s, &c, true).unwrap();
        let d = f(e).derivative;
        let fd = (f(e + h).value - f(e - h).value) / (2.0 * h);
        assert!((d - fd).norm() / d.norm() < 1e-7, "{d} vs {fd}");
    }
}
