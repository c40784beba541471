//! ζ, Hurwitz ζ, Dirichlet β, the completed ξ and Hardy's Z in double
//! precision, all by Euler–Maclaurin summation.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::bernoulli_f64;
use super::gamma::{gamma_unchecked, ln_gamma_unchecked};
use crate::error::{Error, Result};
use crate::sum::ComplexNeumaier;

/// Number of Bernoulli correction terms.
pub const EM_ORDER: usize = 12;

/// Summation cut-off N ≈ max(20, |Im s|), widened for large negative Re s.
pub fn em_cutoff(s: Complex64) -> usize {
    let base = s.im.abs().max(20.0);
    let extra = (-s.re).max(0.0) * 2.0;
    (base + extra).ceil() as usize
}

/// Σ_{m≥0} Σ_j c_j (m + q_j)^{−s} for shifts q_j in (0, 1], by Euler–Maclaurin.
///
/// The integral tail of a two-term difference with opposite unit weights is
/// evaluated in a cancellation-free form so the result stays regular at s = 1.
fn em_shifted(s: Complex64, shifts: &[(f64, f64)], n: usize) -> Complex64 {
    let mut acc = ComplexNeumaier::new();
    for m in 0..n {
        for &(q, c) in shifts {
            acc.add(c * (-s * (m as f64 + q).ln()).exp());
        }
    }
    let one = Complex64::new(1.0, 0.0);
    let u = one - s;
    let nf = n as f64;
    let tail = match shifts {
        [(qa, ca), (qb, cb)] if *ca == 1.0 && *cb == -1.0 => {
            // [(N+qa)^u − (N+qb)^u]/(s−1) = −(N+qb)^u · L · φ(uL), L = ln((N+qa)/(N+qb))
            let l = ((nf + qa) / (nf + qb)).ln();
            let z = u * l;
            let phi = if z.norm() < 1e-5 {
                one + z / 2.0 + z * z / 6.0
            } else {
                (z.exp() - 1.0) / z
            };
            -(u * (nf + qb).ln()).exp() * l * phi
        }
        _ => {
            let mut t = Complex64::new(0.0, 0.0);
            for &(q, c) in shifts {
                t += c * (u * (nf + q).ln()).exp();
            }
            t / (s - 1.0)
        }
    };
    acc.add(tail);
    let mut edge = Complex64::new(0.0, 0.0);
    for &(q, c) in shifts {
        edge += c * (-s * (nf + q).ln()).exp();
    }
    acc.add(0.5 * edge);
    // Bernoulli corrections: B_2k/(2k)! · s(s+1)…(s+2k−2) · Σ c (N+q)^{−s−2k+1}
    let mut poch = s;
    let mut fact = 2.0;
    for k in 1..=EM_ORDER {
        let mut pw = Complex64::new(0.0, 0.0);
        for &(q, c) in shifts {
            let x = nf + q;
            pw += c * (-(s + (2 * k - 1) as f64) * x.ln()).exp();
        }
        acc.add(bernoulli_f64(k) / fact * poch * pw);
        let a = s + (2 * k - 1) as f64;
        let b = s + (2 * k) as f64;
        poch = poch * a * b;
        fact *= ((2 * k + 1) * (2 * k + 2)) as f64;
    }
    acc.value()
}

fn check_finite(s: Complex64) -> Result<()> {
    if s.re.is_finite() && s.im.is_finite() {
        Ok(())
    } else {
        Err(Error::ArgumentDomain(format!("non-finite argument {s}")))
    }
}

/// Riemann ζ(s) by Euler–Maclaurin continuation.
pub fn zeta(s: Complex64) -> Result<Complex64> {
    check_finite(s)?;
    let d = (s - 1.0).norm();
    if d <= 1e-10 {
        return Err(Error::PoleProximity { at: s, distance: d });
    }
    Ok(zeta_unchecked(s))
}

pub(crate) fn zeta_unchecked(s: Complex64) -> Complex64 {
    if s.re < -10.0 {
        return zeta_reflected(s);
    }
    em_shifted(s, &[(1.0, 1.0)], em_cutoff(s))
}

/// ζ(s) = 2^s π^{s−1} sin(πs/2) Γ(1−s) ζ(1−s) for far-left arguments.
fn zeta_reflected(s: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    let w = one - s;
    let log_fac = s * 2f64.ln() + (s - 1.0) * PI.ln() + ln_gamma_unchecked(w);
    log_fac.exp() * (PI * s / 2.0).sin() * em_shifted(w, &[(1.0, 1.0)], em_cutoff(w))
}

/// Hurwitz ζ(s, q) for 0 < q ≤ 1.
pub fn hurwitz_zeta(s: Complex64, q: f64) -> Result<Complex64> {
    check_finite(s)?;
    if !(q > 0.0 && q <= 1.0) {
        return Err(Error::ArgumentDomain(format!("Hurwitz shift q = {q} outside (0, 1]")));
    }
    let d = (s - 1.0).norm();
    if d <= 1e-10 {
        return Err(Error::PoleProximity { at: s, distance: d });
    }
    Ok(em_shifted(s, &[(q, 1.0)], em_cutoff(s)))
}

/// Dirichlet β(s) = 4^{−s}[ζ(s, 1/4) − ζ(s, 3/4)], entire.
pub fn dirichlet_beta(s: Complex64) -> Result<Complex64> {
    check_finite(s)?;
    Ok(dirichlet_beta_unchecked(s))
}

pub(crate) fn dirichlet_beta_unchecked(s: Complex64) -> Complex64 {
    let four = (-s * 4f64.ln()).exp();
    four * em_shifted(s, &[(0.25, 1.0), (0.75, -1.0)], em_cutoff(s))
}

/// ξ(s) = ½ s(s−1) π^{−s/2} Γ(s/2) ζ(s), written as (s−1)π^{−s/2}Γ(1+s/2)ζ(s).
pub fn completed_xi(s: Complex64) -> Result<Complex64> {
    check_finite(s)?;
    let one = Complex64::new(1.0, 0.0);
    // near s = 1 the factor (s−1)ζ(s) cancels; use the reflected point
    let z = if (s - 1.0).norm() < 0.1 { one - s } else { s };
    let pre = (-z / 2.0 * PI.ln()).exp() * gamma_unchecked(one + z / 2.0);
    Ok((z - 1.0) * pre * zeta_unchecked(z))
}

/// θ(t) = Im log Γ(1/4 + it/2) − (t/2) log π.
pub fn riemann_siegel_theta(t: f64) -> f64 {
    ln_gamma_unchecked(Complex64::new(0.25, 0.5 * t)).im - 0.5 * t * PI.ln()
}

/// θ_β(t) = Im log Γ(3/4 + it/2) − (t/2) log(π/4), the phase making β real on
/// the critical line.
pub fn beta_theta(t: f64) -> f64 {
    ln_gamma_unchecked(Complex64::new(0.75, 0.5 * t)).im - 0.5 * t * (PI / 4.0).ln()
}

/// Rotated value e^{iθ(t)} ζ(1/2 + it), returned in full so callers can check
/// the imaginary residue.
pub fn hardy_z_complex(t: f64) -> Complex64 {
    let z = zeta_unchecked(Complex64::new(0.5, t));
    Complex64::from_polar(1.0, riemann_siegel_theta(t)) * z
}

/// Hardy's Z(t), real on the real line.
pub fn hardy_z(t: f64) -> Result<f64> {
    if !(t >= 0.0 && t.is_finite()) {
        return Err(Error::ArgumentDomain(format!("Hardy Z needs t >= 0, got {t}")));
    }
    Ok(hardy_z_complex(t).re)
}

/// The β analogue of Hardy's Z: e^{iθ_β(t)} β(1/2 + it).
pub fn beta_z_complex(t: f64) -> Complex64 {
    let b = dirichlet_beta_unchecked(Complex64::new(0.5, t));
    Complex64::from_polar(1.0, beta_theta(t)) * b
}

pub fn beta_z(t: f64) -> Result<f64> {
    if !(t >= 0.0 && t.is_finite()) {
        return Err(Error::ArgumentDomain(format!("β rotation needs t >= 0, got {t}")));
    }
    Ok(beta_z_complex(t).re)
}

/// ζ′(s) by central differences with one Richardson step from `h` and `h/2`.
pub fn zeta_prime(s: Complex64, h: f64) -> Result<Complex64> {
    let d = |h: f64| -> Result<Complex64> {
        Ok((zeta(s + h)? - zeta(s - h)?) / (2.0 * h))
    };
    let d1 = d(h)?;
    let d2 = d(h / 2.0)?;
    Ok((4.0 * d2 - d1) / 3.0)
}
