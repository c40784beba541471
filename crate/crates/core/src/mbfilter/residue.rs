//! Residues at simple zeros and the double-pole circle check.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::audit::{AuditReport, Verdict};
use crate::error::{Error, Result};
use crate::specfun::{gamma_unchecked, zeta_unchecked};

const ZERO_TOLERANCE: f64 = 1e-8;
const DERIVATIVE_FLOOR: f64 = 1e-10;
const DIFF_STEP: f64 = 1e-6;

/// Φ(s) = π^{−s} Γ(s/2)
fn phi(s: Complex64) -> Complex64 {
    (-s * PI.ln()).exp() * gamma_unchecked(0.5 * s)
}

/// 2Φ(s0)ζ′(2s0) at a simple zero s0 of ζ(2s), with Φ(s) = π^{−s}Γ(s/2).
/// ζ′ is the mean of the real and imaginary centred differences at step 1e-6.
pub fn residue_simple_zero(s0: Complex64) -> Result<Complex64> {
    let w = 2.0 * s0;
    let z = zeta_unchecked(w);
    if z.norm() > ZERO_TOLERANCE {
        return Err(Error::NotAZero { at: s0, residual: z.norm() });
    }
    let h = DIFF_STEP;
    let ih = Complex64::new(0.0, h);
    // centred difference in both directions, averaged
    let d_re = (zeta_unchecked(w + h) - zeta_unchecked(w - h)) / (2.0 * h);
    let d_im = (zeta_unchecked(w + ih) - zeta_unchecked(w - ih)) / (2.0 * ih);
    let dz = 0.5 * (d_re + d_im);
    if dz.norm() < DERIVATIVE_FLOOR {
        return Err(Error::DerivativeVanishes(s0));
    }
    Ok(2.0 * phi(s0) * dz)
}

/// Analytic data for the double-pole check: A, B and the claimed B′(s0).
pub struct DoublePoleData<'a> {
    pub a: &'a dyn Fn(Complex64) -> Complex64,
    pub b: &'a dyn Fn(Complex64) -> Complex64,
    pub b_prime_at_anchor: Complex64,
    pub anchor: Complex64,
}

/// ∮ A(s)B(s)/(s−s0)² ds on circles |s − s0| = ε, compared with the claimed
/// value 2πi A(s0) B′(s0).
///
/// Pass when the discrepancy is negligible or shrinks linearly in ε (ratio
/// between 1.6 and 2.5 per halving). Exact Cauchy gives 2πi (AB)′(s0), so any
/// A′(s0)B(s0) ≠ 0 leaves a constant discrepancy and the verdict is fail.
pub fn double_pole_circle_with(data: &DoublePoleData<'_>, radii: &[f64]) -> AuditReport {
    const TOL: f64 = 1e-12;
    let rhs = 2.0 * PI * Complex64::i() * (data.a)(data.anchor) * data.b_prime_at_anchor;
    let mut disc = Vec::new();
    let mut last = Complex64::new(f64::NAN, 0.0);
    for &eps in radii {
        let n = 256;
        let mut acc = Complex64::new(0.0, 0.0);
        for k in 0..n {
            let th = 2.0 * PI * (k as f64 + 0.5) / n as f64;
            let w = Complex64::from_polar(eps, th);
            // ds = i w dθ
            acc += (data.a)(data.anchor + w) * (data.b)(data.anchor + w) / w * Complex64::i();
        }
        last = acc * (2.0 * PI / n as f64);
        disc.push((last - rhs).norm());
    }
    let scale = rhs.norm().max(1.0);
    let negligible = disc.iter().all(|d| *d <= TOL * scale);
    let linear = disc.len() > 1 && disc.windows(2).all(|w| w[1] > 0.0 && (1.6..=2.5).contains(&(w[0] / w[1])));
    let c_fit = disc.iter().zip(radii).map(|(d, e)| d / e).fold(0.0, f64::max);
    let verdict = if negligible || linear { Verdict::Pass } else { Verdict::Fail };
    let shown: Vec<String> = disc.iter().map(|d| format!("{d:.3e}")).collect();
    AuditReport::with_verdict("double_pole_residue", last, rhs, TOL, verdict)
        .note(format!("discrepancy over eps ladder: [{}]; fitted C = {c_fit:.3e}", shown.join(", ")))
}

/// Radii used by [`double_pole_circle`].
pub const EPS_LADDER: [f64; 3] = [0.05, 0.025, 0.0125];

/// The built-in instance A = exp, B(s) = cosh(s − s0) at s0 = 1/2 + i.
pub fn double_pole_circle() -> AuditReport {
    let anchor = Complex64::new(0.5, 1.0);
    let a = |s: Complex64| s.exp();
    let b = move |s: Complex64| (s - anchor).cosh();
    let data = DoublePoleData { a: &a, b: &b, b_prime_at_anchor: Complex64::new(0.0, 0.0), anchor };
    double_pole_circle_with(&data, &EPS_LADDER)
}
