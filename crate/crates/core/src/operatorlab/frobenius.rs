//! Endpoint classification at x = 0 and square-integrability probes.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::audit::{AuditReport, Verdict};
use crate::bessel::bessel_k;
use crate::error::Result;
use crate::quad::{composite_gl, gl_panel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EndpointClass {
    LimitPoint,
    LimitCircle,
}

/// Both verdicts of the Frobenius test for one order.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FrobeniusReport {
    pub nu: Complex64,
    pub class: EndpointClass,
    pub analytic: EndpointClass,
    pub numeric: EndpointClass,
    /// Ratio of successive decade contributions of the worse branch near 0.
    pub decade_ratio: f64,
}

impl FrobeniusReport {
    pub fn agree(&self) -> bool {
        self.analytic == self.numeric
    }
}

/// The branches behave like x^{−1/2 ± ν}, so the weighted density of the
/// worse one is x·|x^{−1/2−|Re ν|}|² = x^{−2|Re ν|}. Both branches are
/// square-integrable at 0 (limit circle) iff |Re ν| < 1/2.
///
/// The numeric test integrates that density over the decades [1e-6, 1e-1]
/// and calls the integral convergent when successive decade contributions
/// shrink geometrically.
pub fn frobenius_classify(nu: Complex64) -> FrobeniusReport {
    let r = nu.re.abs();
    let analytic = if r < 0.5 { EndpointClass::LimitCircle } else { EndpointClass::LimitPoint };
    let density = |x: f64| Complex64::new(x.powf(-2.0 * r), 0.0);
    let decade = |k: i32| -> f64 {
        let (lo, hi) = (10f64.powi(-k - 1), 10f64.powi(-k));
        let edges: Vec<f64> = (0..=8).map(|j| lo * (hi / lo).powf(j as f64 / 8.0)).collect();
        composite_gl(&density, &edges, 1e-14, 8).value.re
    };
    let parts: Vec<f64> = (1..=5).map(decade).collect();
    let ratios: Vec<f64> = parts.windows(2).map(|w| w[1] / w[0]).collect();
    let decade_ratio = ratios.iter().copied().fold(0.0, f64::max);
    let numeric = if decade_ratio < 1.0 - 1e-9 { EndpointClass::LimitCircle } else { EndpointClass::LimitPoint };
    FrobeniusReport { nu, class: analytic, analytic, numeric, decade_ratio }
}

/// ∫ x |K_ν(x)|² dx from the cutoff to 40, with the cutoff halved from 1e-3
/// until the added pieces either die out or stop shrinking.
pub fn eigenfunction_l2_classifier(nu: Complex64) -> AuditReport {
    let id = "eigenfunction_l2";
    let run = || -> Result<AuditReport> {
        let density = |x: f64| -> Complex64 {
            let k = bessel_k(nu, x).map(|b| b.value).unwrap_or(Complex64::new(f64::NAN, 0.0));
            Complex64::new(x * k.norm_sqr(), 0.0)
        };
        let x0: f64 = 1e-3;
        let mut edges: Vec<f64> = (0..=12).map(|j| x0 * (1.0 / x0).powf(j as f64 / 12.0)).collect();
        edges.extend((1..=39).map(|j| 1.0 + j as f64));
        let body = composite_gl(&density, &edges, 1e-13, 10);
        if !body.value.re.is_finite() {
            return Ok(AuditReport::with_verdict(id, body.value, Complex64::new(f64::NAN, 0.0), 0.95, Verdict::Inconclusive)
                .note("Bessel evaluation failed inside the window"));
        }
        let mut total = body.value.re;
        let mut increments = Vec::new();
        let mut hi = x0;
        for _ in 0..8 {
            let lo = 0.5 * hi;
            increments.push(gl_panel(&density, lo, hi).0.re);
            total += increments.last().copied().unwrap_or(0.0);
            hi = lo;
        }
        let ratios: Vec<f64> = increments.windows(2).map(|w| w[1] / w[0]).collect();
        let last_ratio = ratios.last().copied().unwrap_or(f64::NAN);
        let last_inc = increments.last().copied().unwrap_or(f64::NAN);
        let convergent = last_ratio < 0.95 || last_inc.abs() < 1e-12 * total.abs().max(1e-300);
        let verdict = if convergent { Verdict::Pass } else { Verdict::Divergent };
        Ok(AuditReport::with_verdict(id, Complex64::new(last_ratio, 0.0), Complex64::new(0.95, 0.0), 0.95, verdict).note(format!(
            "integral to cutoff {:.3e}: {total:.10e}; last increment {last_inc:.3e}; increment ratio per halving {last_ratio:.4}",
            hi
        )))
    };
    run().unwrap_or_else(|e| {
        AuditReport::with_verdict(id, Complex64::new(f64::NAN, 0.0), Complex64::new(f64::NAN, 0.0), 0.95, Verdict::Inconclusive)
            .note(format!("{e}"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn classification_examples() {
        assert_eq!(frobenius_classify(c(0.5, 5.0)).class, EndpointClass::LimitPoint);
        let r = frobenius_classify(c(0.3, 0.0));
        assert_eq!(r.class, EndpointClass::LimitCircle);
        assert!(r.agree());
        let r = frobenius_classify(c(0.5, 0.0));
        assert_eq!(r.numeric, EndpointClass::LimitPoint);
        // logarithmic divergence: every decade adds the same ln 10
        assert!((r.decade_ratio - 1.0).abs() < 1e-10);
    }

    #[test]
    fn l2_probes() {
        assert_eq!(eigenfunction_l2_classifier(c(0.5, 7.0673)).verdict, Verdict::Pass);
        assert_eq!(eigenfunction_l2_classifier(c(0.5, 0.0)).verdict, Verdict::Pass);
        assert_eq!(eigenfunction_l2_classifier(c(1.2, 0.0)).verdict, Verdict::Divergent);
        let a = eigenfunction_l2_classifier(c(0.3, 2.0));
        let b = eigenfunction_l2_classifier(c(-0.3, -2.0));
        assert_eq!(a.verdict, b.verdict);
        assert!((a.lhs - b.lhs).norm() < 1e-10);
    }
}
