//! Explicit-formula densities and trace-type sums over zero ordinates.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::audit::{AuditReport, Verdict};
use crate::error::{Error, Result};
use crate::specfun::{gamma, von_mangoldt_table, zeta};
use crate::sum::{complex_sum, neumaier_sum};

/// Largest prime cutoff accepted by the oscillatory density.
pub const DENSITY_PRIME_CEILING: u64 = 1_000_000;
/// Smoothing width used when locating zeros as density peaks.
pub const DENSITY_SIGMA: f64 = 0.25;
/// Increment size at the cap below which the even part counts as converged.
pub const EVEN_PART_INCREMENT: f64 = 1e-6;

/// Sign in front of the prime sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OscillationSign {
    /// +(1/π) Σ … cos(t k log p)
    AsStated,
    /// −(1/π) Σ … cos(t k log p), the derivative of S(t)
    Classical,
}

impl OscillationSign {
    fn factor(self) -> f64 {
        match self {
            OscillationSign::AsStated => 1.0,
            OscillationSign::Classical => -1.0,
        }
    }
}

/// (1/2π) log(t/2π)
pub fn smooth_density(t: f64) -> f64 {
    (t / (2.0 * PI)).ln() / (2.0 * PI)
}

/// ±(1/π) Σ_{p^k ≤ limit} (log p / p^{k/2}) cos(t k log p) e^{−(k log p)²σ²/2}
pub fn oscillatory_density(t_grid: &[f64], prime_limit: u64, sigma: f64, sign: OscillationSign) -> Result<Vec<f64>> {
    if prime_limit > DENSITY_PRIME_CEILING {
        return Err(Error::LimitTooLarge { requested: prime_limit, ceiling: DENSITY_PRIME_CEILING });
    }
    if !(sigma >= 0.0) {
        return Err(Error::InvalidParameter(format!("sigma = {sigma} must be non-negative")));
    }
    let table = von_mangoldt_table(prime_limit.max(1))?;
    // (Λ(n)/√n · damping, log n)
    let terms: Vec<(f64, f64)> = table
        .prime_powers()
        .map(|(n, lam)| {
            let ln = (n as f64).ln();
            (lam / (n as f64).sqrt() * (-0.5 * ln * ln * sigma * sigma).exp(), ln)
        })
        .filter(|(w, _)| *w > 1e-300)
        .collect();
    let s = sign.factor() / PI;
    Ok(t_grid.iter().map(|&t| s * neumaier_sum(terms.iter().map(|&(w, ln)| w * (t * ln).cos()))).collect())
}

/// Local maxima of sampled values, refined by a parabola through three points.
pub fn density_peaks(grid: &[f64], values: &[f64]) -> Vec<f64> {
    let mut out = Vec::new();
    for i in 1..values.len().saturating_sub(1) {
        let (a, b, c) = (values[i - 1], values[i], values[i + 1]);
        if b > a && b >= c {
            let h = grid[i + 1] - grid[i];
            let den = a - 2.0 * b + c;
            let shift = if den != 0.0 { 0.5 * (a - c) / den } else { 0.0 };
            out.push(grid[i] + shift * h);
        }
    }
    out
}

fn tail_even(t: f64) -> f64 {
    // Σ_{γ > t} 2/(1+4γ²) ≈ ∫_t^∞ (1/2γ²)(1/2π) log(γ/2π) dγ
    ((t / (2.0 * PI)).ln() + 1.0) / (4.0 * PI * t)
}

/// I(a) with the zero sum taken over ± pairs; reports |Re I| against a purely
/// imaginary value.
pub fn trace_i_of_a(a: f64, ordinates: &[f64], zero_cap: usize) -> Result<AuditReport> {
    if !(a > 0.0) {
        return Err(Error::InvalidParameter(format!("a = {a} must be positive")));
    }
    if ordinates.is_empty() || zero_cap == 0 {
        return Err(Error::IncompleteCatalog { covered: 0.0, required: 1.0 });
    }
    let mut sorted = ordinates.to_vec();
    sorted.sort_by(f64::total_cmp);
    let used = &sorted[..zero_cap.min(sorted.len())];
    let even_terms: Vec<f64> = used.iter().map(|g| -2.0 / (1.0 + 4.0 * g * g)).collect();
    let even = neumaier_sum(even_terms.iter().copied());
    let odd_unpaired = neumaier_sum(used.iter().map(|g| 2.0 * g / (1.0 + 4.0 * g * g)));
    let last_increment = even_terms.last().map_or(0.0, |x| x.abs());
    let t_last = *used.last().expect("non-empty");
    let bracket = even + a.ln() + 0.5 * PI.ln() + 2f64.ln();
    let gm = gamma(Complex64::new(-0.25, 0.0))?;
    let prefactor = Complex64::i() * gm / (4.0 * 2f64.sqrt() * PI.powf(0.25));
    let value = prefactor * bracket;
    let rhs = Complex64::new(0.0, value.im);
    let verdict = if last_increment < EVEN_PART_INCREMENT { Verdict::Pass } else { Verdict::Inconclusive };
    Ok(AuditReport::with_verdict("trace_i_of_a", value, rhs, EVEN_PART_INCREMENT, verdict).note(format!(
        "{} zeros up to t = {t_last:.6}; paired even sum {even:.12e}, last increment {last_increment:.3e}, tail estimate {:.3e}; \
         unpaired odd sum {odd_unpaired:.6} grows like (1/4π) log² t and has no limit",
        used.len(),
        tail_even(t_last)
    )))
}

/// Partial sums of the prime side 2 Σ Λ(n)/√n · (π/4) e^{−π|log n/2π|}, checked
/// at powers of ten, against the paired zero side.
pub fn weil_prime_side(prime_limit: u64, ordinates: &[f64]) -> Result<(AuditReport, Vec<(u64, f64)>)> {
    let table = von_mangoldt_table(prime_limit.max(10))?;
    let mut checkpoints = Vec::new();
    let mut next = 10u64;
    let mut acc = crate::sum::Neumaier::new();
    for (n, lam) in table.prime_powers() {
        while n > next {
            checkpoints.push((next, acc.value()));
            next *= 10;
        }
        acc.add(2.0 * lam / (n as f64).sqrt() * (PI / 4.0) * (-(n as f64).ln() / 2.0).exp());
    }
    while next <= table.limit {
        checkpoints.push((next, acc.value()));
        next *= 10;
    }
    let total = acc.value();
    let zero_side = complex_sum(ordinates.iter().map(|g| Complex64::new(-1.0, 0.0) / (1.0 + 4.0 * g * g)));
    // per-decade growth tends to (π/2) ln 10 for a logarithmically divergent sum
    let growth: Vec<f64> = checkpoints.windows(2).map(|w| w[1].1 - w[0].1).collect();
    let expected = PI / 2.0 * 10f64.ln();
    let last_growth = growth.last().copied().unwrap_or(f64::NAN);
    let verdict = if last_growth.is_finite() && (last_growth / expected - 1.0).abs() < 0.25 {
        Verdict::Divergent
    } else {
        Verdict::Inconclusive
    };
    let report = AuditReport::with_verdict("weil_prime_side", Complex64::new(total, 0.0), zero_side, 0.0, verdict).note(format!(
        "prime sum to {} = {total:.9}; last decade growth {last_growth:.6} vs (pi/2) ln 10 = {expected:.6}; \
         transform at 0 is pi/4 and terms are (pi/2) Lambda(n)/n",
        table.limit
    ));
    Ok((report, checkpoints))
}

/// Σ (2t_n + i)^{−p} against e^{−iπp/2} (2a)^p ζ(p).
pub fn trace_class_audit(p: f64, a: f64, ordinates: &[f64], zero_cap: usize) -> Result<AuditReport> {
    if !(p > 1.0) {
        return Err(Error::InvalidParameter(format!("p = {p} must exceed 1")));
    }
    if ordinates.is_empty() {
        return Err(Error::IncompleteCatalog { covered: 0.0, required: 1.0 });
    }
    let used = &ordinates[..zero_cap.clamp(1, ordinates.len())];
    let lhs = complex_sum(used.iter().map(|&t| (-p * Complex64::new(2.0 * t, 1.0).ln()).exp()));
    let zp = zeta(Complex64::new(p, 0.0))?;
    let rhs = Complex64::from_polar(1.0, -PI * p / 2.0) * (2.0 * a).powf(p) * zp;
    let t = *used.last().expect("non-empty");
    let tail = 2f64.powf(-p) * t.powf(1.0 - p) * ((t / (2.0 * PI)).ln().max(0.0) + 1.0 / (p - 1.0)) / (2.0 * PI * (p - 1.0));
    let mut r = AuditReport::compare("trace_class", lhs, rhs, 1e-6);
    if r.abs_discrepancy <= tail {
        r.verdict = Verdict::Inconclusive;
    }
    Ok(r.note(format!("p = {p}, a = {a}, {} zeros up to t = {t:.6}, tail estimate {tail:.3e}", used.len())))
}

/// −Σ_{k ≤ k_max} (2az)^{2k} ζ(4k)/k against log(2^{−z} ζ(2z)).
pub fn fredholm_audit(z: f64, a: f64, k_max: usize) -> Result<AuditReport> {
    let x = 2.0 * a * z;
    if x.abs() >= 1.0 {
        return Err(Error::SeriesDivergent(x));
    }
    if !(0.0..1.0).contains(&z) || z == 0.5 {
        return Err(Error::ArgumentDomain(format!("z = {z} must lie in [0, 1) away from 1/2")));
    }
    let mut terms = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        let zk = zeta(Complex64::new(4.0 * k as f64, 0.0))?.re;
        terms.push(-x.powi(2 * k as i32) * zk / k as f64);
    }
    let lhs = Complex64::new(neumaier_sum(terms), 0.0);
    let z2 = zeta(Complex64::new(2.0 * z, 0.0))?;
    let rhs = (Complex64::new(2f64.powf(-z), 0.0) * z2).ln();
    Ok(AuditReport::compare("fredholm_determinant", lhs, rhs, 1e-10).note(format!(
        "z = {z}, a = {a}, {k_max} terms; zeta(2z) = {:.12}{}",
        z2.re,
        if z2.re < 0.0 { ", negative so the logarithm takes the principal branch" } else { "" }
    )))
}
