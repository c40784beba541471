//! Hadamard finite part of ∫ f(z)/(z − c)² dz over a real segment.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quad::composite_gl;

const AGREEMENT: f64 = 1e-8;

/// Finite part of ∫_{c−L}^{c+L} f(z)/(z − c)² dz for f analytic near c.
///
/// For each ε on the ladder the regularised integral
/// ∫_ε^L [f(c+u) + f(c−u) − 2f(c)]/u² du − 2f(c)/L is evaluated; this equals
/// the integral over |z − c| ≥ ε with the divergent 2f(c)/ε removed. The
/// values are then extrapolated to ε = 0 with Neville's scheme.
pub fn hadamard_finite_part<F>(f: &F, center: f64, half_width: f64, epsilon_ladder: &[f64]) -> Result<Complex64>
where
    F: Fn(f64) -> Complex64 + Sync,
{
    if epsilon_ladder.len() < 3 {
        return Err(Error::InvalidParameter("epsilon ladder needs at least 3 entries".into()));
    }
    if !epsilon_ladder.windows(2).all(|w| w[1] < w[0]) || epsilon_ladder[0] >= half_width || epsilon_ladder[epsilon_ladder.len() - 1] <= 0.0 {
        return Err(Error::InvalidParameter("epsilon ladder must decrease strictly inside (0, L)".into()));
    }
    let f0 = f(center);
    let g = |u: f64| (f(center + u) + f(center - u) - 2.0 * f0) / (u * u);
    let values: Vec<Complex64> = epsilon_ladder
        .iter()
        .map(|&eps| {
            let n = 32;
            let edges: Vec<f64> = (0..=n).map(|k| eps + (half_width - eps) * k as f64 / n as f64).collect();
            composite_gl(&g, &edges, 1e-15, 10).value - 2.0 * f0 / half_width
        })
        .collect();
    // Neville: p[i] holds the interpolant through points i..=i+m evaluated at 0
    let xs = epsilon_ladder;
    let mut p = values.clone();
    let mut prev_best = p[p.len() - 1];
    let mut best = prev_best;
    for m in 1..p.len() {
        for i in 0..p.len() - m {
            p[i] = (xs[i + m] * p[i] - xs[i] * p[i + 1]) / (xs[i + m] - xs[i]);
        }
        prev_best = best;
        best = p[0];
    }
    let scale = best.norm().max(1.0);
    if (best - prev_best).norm() > AGREEMENT * scale || !best.is_finite() {
        return Err(Error::NoConvergence(format!(
            "finite-part extrapolation unsettled: last two estimates {prev_best} and {best}"
        )));
    }
    Ok(best)
}
