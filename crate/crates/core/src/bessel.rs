//! Modified Bessel functions K_ν(x) and I_ν(x) of real argument and complex
//! order, plus the Wronskian and asymptotic-regime checks.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::audit::{AuditReport, Verdict};
use crate::error::{Error, Result};
use crate::specfun::gamma_unchecked;
use crate::sum::ComplexNeumaier;

/// The order ν = 1/2 + iE/2 attached to a real energy E.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralParameter {
    pub energy: f64,
    pub order: Complex64,
}

impl SpectralParameter {
    pub fn from_energy(energy: f64) -> Self {
        SpectralParameter { energy, order: Complex64::new(0.5, 0.5 * energy) }
    }

    /// Complex energies arise as Newton iterates; the order follows linearly.
    pub fn from_complex_energy(e: Complex64) -> Complex64 {
        Complex64::new(0.5, 0.0) + Complex64::new(0.0, 0.5) * e
    }
}

/// One evaluated Bessel value with its absolute error estimate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BesselEval {
    pub order: Complex64,
    pub argument: f64,
    pub value: Complex64,
    pub abs_error_estimate: f64,
}

/// Largest |Re ν| and |Im ν| accepted by [`bessel_k`].
pub const K_MAX_RE: f64 = 5.0;
pub const K_MAX_IM: f64 = 100.0;
/// Power-series ceiling for [`bessel_i`].
pub const I_MAX_X: f64 = 30.0;

/// Keeps the shifted line strictly inside the strip |Im t| < π/2.
const SHIFT_MARGIN: f64 = 0.05;

fn check_x(x: f64) -> Result<()> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::ArgumentDomain(format!("Bessel argument must be positive, got {x}")));
    }
    Ok(())
}

/// K_ν(x) = ½ ∫ exp(−x cosh t − ν t) dt over the real line.
///
/// The line is moved to Im t = c with sin c ≈ −Im ν / x, which removes the
/// oscillation of e^{−iνt} near the origin and keeps cancellation bounded for
/// large |Im ν|. The shifted integrand decays double-exponentially, so the
/// trapezoid rule converges geometrically; the step is halved until two
/// successive levels agree.
pub fn bessel_k(nu: Complex64, x: f64) -> Result<BesselEval> {
    check_x(x)?;
    if nu.re.abs() > K_MAX_RE || nu.im.abs() > K_MAX_IM || !nu.re.is_finite() || !nu.im.is_finite() {
        return Err(Error::ArgumentDomain(format!("order {nu} outside |Re| <= 5, |Im| <= 100")));
    }
    let mu = nu.im;
    let c = -mu.signum() * (mu.abs() / x).min(1.0).asin().min(PI / 2.0 - SHIFT_MARGIN);
    let cc = c.cos();
    let log_mag = |t: f64| -x * cc * t.cosh() - nu.re * t + mu * c;
    let integrand = |t: f64| -> Complex64 {
        let z = Complex64::new(t, c);
        (-x * z.cosh() - nu * z).exp()
    };
    // peak of the modulus and the cut-off where it drops below 1e-18 of it
    let t0 = -(nu.re / (x * cc)).asinh();
    let peak = log_mag(t0);
    let cutoff = peak - 41.5;
    let mut lo = t0 - 0.5;
    while log_mag(lo) > cutoff {
        lo -= 0.5;
    }
    let mut hi = t0 + 0.5;
    while log_mag(hi) > cutoff {
        hi += 0.5;
    }
    // the half-width must also resolve the residual oscillation |Im ν|·t
    let mut h = (0.25f64).min(1.0 / (1.0 + 0.1 * (mu.abs() / x).min(200.0)));
    let trap = |h: f64, offset: f64, acc: &mut ComplexNeumaier, l1: &mut f64| {
        let n0 = ((lo - t0) / h).floor() as i64;
        let n1 = ((hi - t0) / h).ceil() as i64;
        for k in n0..=n1 {
            let v = integrand(t0 + (k as f64 + offset) * h);
            *l1 += v.norm();
            acc.add(v);
        }
    };
    let mut acc = ComplexNeumaier::new();
    let mut l1 = 0.0;
    trap(h, 0.0, &mut acc, &mut l1);
    let mut prev = acc.value() * h;
    for _ in 0..12 {
        // refine with the midpoints of the current grid
        let mut mid = ComplexNeumaier::new();
        let mut l1m = 0.0;
        trap(h, 0.5, &mut mid, &mut l1m);
        acc.add(mid.value());
        l1 += l1m;
        h *= 0.5;
        let cur = acc.value() * h;
        let err = (cur - prev).norm();
        let mass = l1 * h;
        prev = cur;
        if err <= 1e-15 * mass.max(cur.norm()) {
            let floor = 4.0 * f64::EPSILON * mass;
            return Ok(BesselEval {
                order: nu,
                argument: x,
                value: 0.5 * cur,
                abs_error_estimate: 0.5 * (err + floor),
            });
        }
    }
    Err(Error::QuadratureNonConvergence(format!("K_{nu}({x}) trapezoid failed to settle")))
}

/// I_ν(x) by its power series Σ (x/2)^{2k+ν} / (k! Γ(k+ν+1)).
pub fn bessel_i(nu: Complex64, x: f64) -> Result<BesselEval> {
    check_x(x)?;
    if x > I_MAX_X {
        return Err(Error::SeriesOverflow(x));
    }
    if nu.im.abs() > K_MAX_IM {
        return Err(Error::ArgumentDomain(format!("order {nu} has |Im| > 100")));
    }
    // I_{−n} = I_n for integers, where 1/Γ(ν+1) vanishes
    let nu = if nu.im == 0.0 && nu.re < 0.0 && nu.re == nu.re.round() { -nu } else { nu };
    let half = 0.5 * x;
    let lead = (nu * half.ln()).exp() / gamma_unchecked(nu + 1.0);
    let q = half * half;
    let mut term = lead;
    let mut acc = ComplexNeumaier::new();
    let mut mass = 0.0;
    acc.add(term);
    mass += term.norm();
    let mut k = 0usize;
    loop {
        k += 1;
        term = term * q / (k as f64 * (nu + k as f64));
        acc.add(term);
        mass += term.norm();
        if k as f64 > half && term.norm() <= 1e-18 * acc.value().norm().max(1e-300) {
            break;
        }
        if k > 500 {
            break;
        }
    }
    let value = acc.value();
    Ok(BesselEval {
        order: nu,
        argument: x,
        value,
        abs_error_estimate: 4.0 * f64::EPSILON * mass * (k as f64).sqrt(),
    })
}

/// |x · W(K_ν, I_ν)(x) − 1| with W(K, I) = K I′ − K′ I, derivatives from
/// centred differences at h = 1e-5·x and one Richardson step.
pub fn wronskian_check(nu: Complex64, x: f64) -> Result<f64> {
    check_x(x)?;
    let h = 1e-5 * x;
    let k0 = bessel_k(nu, x)?.value;
    let i0 = bessel_i(nu, x)?.value;
    let deriv = |f: &dyn Fn(f64) -> Result<Complex64>| -> Result<Complex64> {
        let d1 = (f(x + h)? - f(x - h)?) / (2.0 * h);
        let d2 = (f(x + 0.5 * h)? - f(x - 0.5 * h)?) / h;
        Ok((4.0 * d2 - d1) / 3.0)
    };
    let dk = deriv(&|y| Ok(bessel_k(nu, y)?.value))?;
    let di = deriv(&|y| Ok(bessel_i(nu, y)?.value))?;
    let w = k0 * di - dk * i0;
    Ok((x * w - 1.0).norm())
}

/// Which end of the argument range the validator probes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    SmallX,
    LargeX,
}

fn ols_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    for (x, y) in xs.iter().zip(ys) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
    }
    sxy / sxx
}

/// Fits the predicted leading behaviour of K_ν on a geometric ladder.
///
/// Small x: the power −|Re ν| of (x/2)^{−ν}, after removing the companion
/// term ½Γ(−ν)(x/2)^{ν} whose slower decay otherwise biases a short ladder.
/// ν = 0 is checked as the logarithm −log(x/2) instead. Large x: the decay
/// rate of x^{1/2}|K_ν(x)|, predicted to be −1 per unit x.
pub fn asymptotic_validator(nu: Complex64, regime: Regime) -> AuditReport {
    const TOL: f64 = 0.02;
    let id = match regime {
        Regime::SmallX => "bessel_small_x",
        Regime::LargeX => "bessel_large_x",
    };
    let run = || -> Result<AuditReport> {
        match regime {
            Regime::SmallX => {
                let ladder: Vec<f64> = (0..9).map(|k| 1e-3 * 10f64.powf(k as f64 / 4.0)).collect();
                if nu.norm() < 1e-12 {
                    let lx: Vec<f64> = ladder.iter().map(|x| x.ln()).collect();
                    let ys: Vec<f64> = ladder
                        .iter()
                        .map(|&x| bessel_k(nu, x).map(|b| b.value.re))
                        .collect::<Result<_>>()?;
                    let slope = ols_slope(&lx, &ys);
                    let rel = (slope + 1.0).abs();
                    let v = if rel <= TOL { Verdict::Pass } else { Verdict::Fail };
                    return Ok(AuditReport::with_verdict(
                        id,
                        Complex64::new(slope, 0.0),
                        Complex64::new(-1.0, 0.0),
                        TOL,
                        v,
                    )
                    .note("order zero: logarithmic divergence K ~ -log(x/2), slope of K against log x fitted"));
                }
                if nu.re.abs() >= 0.5 {
                    return Ok(AuditReport::with_verdict(
                        id,
                        Complex64::new(f64::NAN, 0.0),
                        Complex64::new(-nu.re.abs(), 0.0),
                        TOL,
                        Verdict::Inconclusive,
                    )
                    .note("order outside the strip |Re nu| < 1/2 where the small-x lemma applies"));
                }
                if nu.re == 0.0 {
                    return Ok(AuditReport::with_verdict(
                        id,
                        Complex64::new(f64::NAN, 0.0),
                        Complex64::new(0.0, 0.0),
                        TOL,
                        Verdict::Inconclusive,
                    )
                    .note("purely imaginary order: both power terms have equal modulus, no single exponent"));
                }
                let lead = if nu.re > 0.0 { nu } else { -nu };
                let companion = 0.5 * gamma_unchecked(-lead);
                let lx: Vec<f64> = ladder.iter().map(|x| x.ln()).collect();
                let mut naive = Vec::new();
                let mut corrected = Vec::new();
                for &x in &ladder {
                    let k = bessel_k(nu, x)?.value;
                    naive.push(k.norm().ln());
                    let c = companion * (lead * (0.5 * x).ln()).exp();
                    corrected.push((k - c).norm().ln());
                }
                let slope = ols_slope(&lx, &corrected);
                let naive_slope = ols_slope(&lx, &naive);
                let predicted = -lead.re;
                let rel = ((slope - predicted) / predicted).abs();
                let v = if rel <= TOL { Verdict::Pass } else { Verdict::Fail };
                Ok(AuditReport::with_verdict(
                    id,
                    Complex64::new(slope, 0.0),
                    Complex64::new(predicted, 0.0),
                    TOL,
                    v,
                )
                .note(format!(
                    "ladder 1e-3..1e-1; companion-corrected slope {slope:.6}; uncorrected slope {naive_slope:.6}"
                )))
            }
            Regime::LargeX => {
                let ladder: Vec<f64> = (0..7).map(|k| 10.0 + 5.0 * k as f64).collect();
                let ys: Vec<f64> = ladder
                    .iter()
                    .map(|&x| bessel_k(nu, x).map(|b| b.value.norm().ln() + 0.5 * x.ln()))
                    .collect::<Result<_>>()?;
                let slope = ols_slope(&ladder, &ys);
                let rel = (slope + 1.0).abs();
                let v = if rel <= TOL { Verdict::Pass } else { Verdict::Fail };
                Ok(AuditReport::with_verdict(
                    id,
                    Complex64::new(slope, 0.0),
                    Complex64::new(-1.0, 0.0),
                    TOL,
                    v,
                )
                .note("ladder 10..40; decay rate of log(x^{1/2}|K|)"))
            }
        }
    };
    match run() {
        Ok(r) => r,
        Err(e) => AuditReport::with_verdict(
            id,
            Complex64::new(f64::NAN, 0.0),
            Complex64::new(f64::NAN, 0.0),
            TOL,
            Verdict::Inconclusive,
        )
        .note(format!("evaluation failed: {e}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::composite_gl;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn k_half_closed_form() {
        let k = bessel_k(c(0.5, 0.0), 1.0).unwrap();
        let want = (PI / 2.0).sqrt() * (-1.0f64).exp();
        assert!((k.value.re - want).abs() < 1e-15 && k.value.im.abs() < 1e-16);
        assert!(k.abs_error_estimate >= 0.0);
    }

    #[test]
    fn k_against_oracle() {
        let cases = [
            (c(0.5, 3.0), 2.0, c(0.011_328_996_956_835_236, 0.011_165_946_689_945_285)),
            (c(0.3, 0.0), 0.05, c(3.811_966_336_769_110_7, 0.0)),
            (c(3.0, 20.0), 0.05, c(-1.106_699_352_856_179_3e-6, -3.086_685_276_679_072_5e-6)),
            (c(0.5, 50.0), 1.0, c(-5.202_750_457_956_107e-35, -1.286_130_325_696_836_2e-34)),
            (c(0.0, 0.0), 10.0, c(1.778_006_231_616_765_2e-5, 0.0)),
            (c(0.5, 5.0), 2.0, c(-4.938_688_411_296_140_6e-4, -1.598_642_053_330_167e-4)),
            (c(-2.0, 7.0), 15.0, c(1.352_086_850_396_547_7e-8, -1.820_109_454_728_364e-8)),
            (c(4.5, -30.0), 40.0, c(-8.370_638_684_379_668e-24, 5.340_507_600_659_858e-24)),
            (c(0.5, 100.0), 3.0, c(5.529_989_285_816_995e-69, -2.600_868_623_446_526e-69)),
        ];
        for (nu, x, want) in cases {
            let got = bessel_k(nu, x).unwrap().value;
            assert!(rel(got, want) < 1e-11, "K_{nu}({x}) = {got}, want {want}");
        }
    }

    #[test]
    fn k_order_symmetry() {
        let a = bessel_k(c(0.5, 3.0), 2.0).unwrap().value;
        let b = bessel_k(c(-0.5, -3.0), 2.0).unwrap().value;
        assert!(rel(a, b) < 1e-12);
    }

    #[test]
    fn k_matches_mellin_barnes_representation() {
        // K_ν(x) = (1/4πi) ∫ Γ(s)Γ(s−ν)(x/2)^{ν−2s} ds on Re s = c > Re ν
        let nu = c(0.5, 6.020_948_904_7);
        let x: f64 = 0.5;
        let g = 0.9;
        let f = |t: f64| {
            let s = c(g, t);
            gamma_unchecked(s) * gamma_unchecked(s - nu) * ((nu - 2.0 * s) * (0.5 * x).ln()).exp()
        };
        let edges: Vec<f64> = (0..=64).map(|k| -40.0 + 80.0 * k as f64 / 64.0).collect();
        let mb = composite_gl(&f, &edges, 1e-18, 12).value / (4.0 * PI);
        let k = bessel_k(nu, x).unwrap().value;
        let want = c(1.671_490_913_359_651e-4, 1.154_267_995_237_544_5e-4);
        assert!(rel(k, want) < 1e-11);
        assert!(rel(mb, k) < 1e-11, "{mb} vs {k}");
    }

    #[test]
    fn k_rejects_bad_argument() {
        assert!(matches!(bessel_k(c(0.5, 0.0), 0.0), Err(Error::ArgumentDomain(_))));
        assert!(matches!(bessel_k(c(0.5, 120.0), 1.0), Err(Error::ArgumentDomain(_))));
    }

    #[test]
    fn i_closed_forms_and_oracle() {
        let i = bessel_i(c(0.5, 0.0), 1.0).unwrap().value;
        assert!((i.re - (2.0 / PI).sqrt() * 1f64.sinh()).abs() < 1e-15);
        let z = bessel_i(c(0.0, 0.0), 1e-3).unwrap().value;
        assert!((z.re - 1.000_000_250_000_015_6).abs() < 1e-15);
        let cases = [
            (c(0.5, 2.0), 3.0, c(8.629_046_952_039_942, -5.325_804_035_437_783)),
            (c(0.5, 5.0), 2.0, c(-0.140_395_949_212_702_74, 216.728_622_248_142_8)),
            (c(2.5, -40.0), 25.0, c(-8.793_230_980_085_176e24, 4.793_406_774_912_018e24)),
            (c(-1.5, 3.0), 0.7, c(-123.989_915_178_440_85, -635.987_423_325_145_5)),
        ];
        for (nu, x, want) in cases {
            let got = bessel_i(nu, x).unwrap().value;
            assert!(rel(got, want) < 1e-11, "I_{nu}({x}) = {got}");
        }
        assert!(matches!(bessel_i(c(0.5, 0.0), 31.0), Err(Error::SeriesOverflow(_))));
    }

    /// Miller's backward recurrence normalised by
    /// (x/2)^ν = Σ_k (−1)^k (ν+2k) Γ(ν+k)/k! · I_{ν+2k}(x).
    fn miller_i(nu: Complex64, x: f64) -> Complex64 {
        let top = 80usize;
        let mut vals = vec![c(0.0, 0.0); top + 2];
        vals[top + 1] = c(0.0, 0.0);
        vals[top] = c(1e-30, 0.0);
        for k in (1..=top).rev() {
            // I_{μ−1} = (2μ/x) I_μ + I_{μ+1}
            let mu = nu + k as f64;
            vals[k - 1] = 2.0 * mu / x * vals[k] + vals[k + 1];
        }
        let mut norm = c(0.0, 0.0);
        let mut gk = gamma_unchecked(nu);
        let mut fact = 1.0;
        for k in 0..=(top / 2) {
            if k > 0 {
                gk *= nu + (k - 1) as f64;
                fact *= k as f64;
            }
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            norm += sign * (nu + 2.0 * k as f64) * gk / fact * vals[2 * k];
        }
        let target = (nu * (0.5 * x).ln()).exp();
        vals[0] * target / norm
    }

    #[test]
    fn i_matches_miller_recurrence() {
        let nu = c(0.5, 2.0);
        let a = bessel_i(nu, 3.0).unwrap().value;
        let b = miller_i(nu, 3.0);
        assert!(rel(a, b) < 1e-11, "{a} vs {b}");
    }

    #[test]
    fn wronskian_residuals() {
        assert!(wronskian_check(c(0.5, 0.0), 1.0).unwrap() < 1e-9);
        assert!(wronskian_check(c(0.5, 5.0), 2.0).unwrap() < 1e-7);
        assert!(wronskian_check(c(0.0, 0.0), 10.0).unwrap() < 1e-7);
    }

    #[test]
    fn validator_regimes() {
        let r = asymptotic_validator(c(0.3, 0.0), Regime::SmallX);
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        assert!((r.lhs.re + 0.3).abs() < 0.006);
        let r = asymptotic_validator(c(0.5, 4.0), Regime::LargeX);
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        let r = asymptotic_validator(c(0.0, 0.0), Regime::SmallX);
        assert_eq!(r.verdict, Verdict::Pass);
        assert!(r.notes.contains("logarithmic"));
    }
}
