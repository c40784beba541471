//! Nearest-neighbour spacing and pair-correlation comparisons.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::unfold::{UnfoldedSpectrum, MIN_WINDOW};
use crate::audit::{AuditReport, Verdict};
use crate::error::{Error, Result};

/// Below this many spacings (or levels) a comparison is reported but never passes.
pub const FULL_SAMPLE: usize = 100;
pub const KS_PASS: f64 = 0.05;
pub const KS_FAIL: f64 = 0.25;
/// Gaussian smoothing width for the two-point estimator, in unfolded units.
pub const PAIR_WINDOW: f64 = 0.1;
pub const PAIR_TOLERANCE: f64 = 0.2;

/// P(s) = (32/π²) s² e^{−4s²/π}
pub fn wigner_dyson_pdf(s: f64) -> f64 {
    32.0 / (PI * PI) * s * s * (-4.0 * s * s / PI).exp()
}

/// ∫₀ˢ P = erf(2s/√π) − (4s/π) e^{−4s²/π}
pub fn wigner_dyson_cdf(s: f64) -> f64 {
    if s <= 0.0 {
        return 0.0;
    }
    libm::erf(2.0 * s / PI.sqrt()) - 4.0 * s / PI * (-4.0 * s * s / PI).exp()
}

/// 1 − (sin πω / πω)²
pub fn sine_kernel_r2(omega: f64) -> f64 {
    if omega == 0.0 {
        return 0.0;
    }
    let x = PI * omega;
    1.0 - (x.sin() / x).powi(2)
}

/// Kolmogorov–Smirnov distance between a sample and the Wigner–Dyson law.
pub fn ks_wigner_dyson(sample: &[f64]) -> f64 {
    let mut s = sample.to_vec();
    s.sort_by(f64::total_cmp);
    let n = s.len() as f64;
    s.iter()
        .enumerate()
        .map(|(i, &x)| {
            let f = wigner_dyson_cdf(x);
            (f - i as f64 / n).max((i + 1) as f64 / n - f)
        })
        .fold(0.0, f64::max)
}

/// Inverse-CDF draws from the Wigner–Dyson surmise.
pub fn sample_wigner_dyson(n: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let u: f64 = rng.gen();
            let (mut lo, mut hi) = (0.0, 6.0);
            for _ in 0..60 {
                let mid = 0.5 * (lo + hi);
                if wigner_dyson_cdf(mid) < u {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            0.5 * (lo + hi)
        })
        .collect()
}

/// Unit-mean exponential spacings.
pub fn sample_poisson(n: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| -(1.0 - rng.gen::<f64>()).ln()).collect()
}

/// Levels whose spacings are the given sample, starting at 0.
pub fn levels_from_spacings(spacings: &[f64]) -> UnfoldedSpectrum {
    let mut acc = 0.0;
    let mut levels = vec![0.0];
    for s in spacings {
        acc += s;
        levels.push(acc);
    }
    UnfoldedSpectrum::from_unfolded(levels)
}

fn ks_verdict(ks: f64, n: usize) -> Verdict {
    if ks > KS_FAIL {
        Verdict::Fail
    } else if ks < KS_PASS && n >= FULL_SAMPLE {
        Verdict::Pass
    } else {
        Verdict::Inconclusive
    }
}

/// KS distance of the unfolded spacings from Wigner–Dyson.
///
/// Pass below 0.05, fail above 0.25, inconclusive between; samples under
/// 100 spacings are at best inconclusive.
pub fn spacing_vs_gue(spectrum: &UnfoldedSpectrum) -> Result<AuditReport> {
    let sp = spectrum.spacings();
    if sp.len() < MIN_WINDOW {
        return Err(Error::WindowTooSparse { found: sp.len(), needed: MIN_WINDOW });
    }
    let mean = spectrum.mean_spacing();
    // rescale so the sample has unit mean, as the surmise assumes
    let normed: Vec<f64> = sp.iter().map(|s| s / mean).collect();
    let ks = ks_wigner_dyson(&normed);
    let verdict = ks_verdict(ks, sp.len());
    Ok(AuditReport::with_verdict("gue_spacing", Complex64::new(ks, 0.0), Complex64::new(0.0, 0.0), KS_PASS, verdict).note(format!(
        "{} spacings, mean {mean:.6}; KS distance {ks:.6}; bands: pass < {KS_PASS}, fail > {KS_FAIL}, at least {FULL_SAMPLE} spacings to pass",
        sp.len()
    )))
}

/// Edge-corrected two-point density Σ_{i<j} G(ω − (e_j − e_i)) / (L − ω).
pub fn pair_density(spectrum: &UnfoldedSpectrum, omega: f64) -> f64 {
    let e = &spectrum.unfolded;
    let len = e.last().copied().unwrap_or(0.0) - e.first().copied().unwrap_or(0.0);
    let norm = 1.0 / (PAIR_WINDOW * (2.0 * PI).sqrt());
    let mut acc = 0.0;
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            let d = e[j] - e[i];
            if d > omega + 8.0 * PAIR_WINDOW {
                break;
            }
            let u = (omega - d) / PAIR_WINDOW;
            acc += norm * (-0.5 * u * u).exp();
        }
    }
    acc / (len - omega).max(1e-300)
}

/// Rows of (ω, estimated R₂, sine-kernel R₂).
pub type PairTable = Vec<(f64, f64, f64)>;

/// Estimated R₂ against the sine kernel on `omega_grid`.
pub fn pair_correlation(spectrum: &UnfoldedSpectrum, omega_grid: &[f64]) -> Result<(AuditReport, PairTable)> {
    let n = spectrum.unfolded.len();
    if n < MIN_WINDOW {
        return Err(Error::WindowTooSparse { found: n, needed: MIN_WINDOW });
    }
    let table: PairTable = omega_grid.iter().map(|&w| (w, pair_density(spectrum, w), sine_kernel_r2(w))).collect();
    let dev: Vec<f64> = table.iter().filter(|r| r.0 >= 0.25 && r.0 <= 3.0).map(|r| (r.1 - r.2).abs()).collect();
    let mad = if dev.is_empty() { f64::NAN } else { dev.iter().sum::<f64>() / dev.len() as f64 };
    let verdict = if !mad.is_finite() {
        Verdict::Inconclusive
    } else if mad >= PAIR_TOLERANCE {
        Verdict::Fail
    } else if n >= FULL_SAMPLE {
        Verdict::Pass
    } else {
        Verdict::Inconclusive
    };
    let report = AuditReport::with_verdict("pair_correlation", Complex64::new(mad, 0.0), Complex64::new(0.0, 0.0), PAIR_TOLERANCE, verdict)
        .note(format!("{n} levels; mean |R2 - sine kernel| on [0.25, 3] = {mad:.6}; Gaussian window {PAIR_WINDOW}"));
    Ok((report, table))
}
