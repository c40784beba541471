//! Grid-level checks built from the endpoint classifier and the phase integrator.

use num_complex::Complex64;

use super::frobenius::{frobenius_classify, EndpointClass};
use super::prufer::{prufer_integrate, PhaseForm, RadialProblem};
use crate::audit::{AuditReport, Verdict};
use crate::error::Result;

/// Orders ν_k = k/(n−1) + i·(2k mod 7), Re ν spanning [0, 1].
pub fn frobenius_grid(n: usize) -> Vec<Complex64> {
    let d = (n.max(2) - 1) as f64;
    (0..n).map(|k| Complex64::new(k as f64 / d, ((2 * k) % 7) as f64)).collect()
}

/// Counts grid points where both the analytic and the quadrature class equal
/// "limit circle iff Re ν < 1/2".
pub fn frobenius_grid_check(n: usize) -> AuditReport {
    let grid = frobenius_grid(n);
    let mut mismatches = Vec::new();
    for &nu in &grid {
        let r = frobenius_classify(nu);
        let expected = if nu.re.abs() < 0.5 { EndpointClass::LimitCircle } else { EndpointClass::LimitPoint };
        if r.class != expected || r.numeric != expected {
            mismatches.push(format!("{:.4}{:+.1}i", nu.re, nu.im));
        }
    }
    let hits = grid.len() - mismatches.len();
    let verdict = if mismatches.is_empty() { Verdict::Pass } else { Verdict::Fail };
    let mut r = AuditReport::with_verdict(
        "frobenius_criterion",
        Complex64::new(hits as f64, 0.0),
        Complex64::new(grid.len() as f64, 0.0),
        0.0,
        verdict,
    )
    .note(format!("{hits} of {} orders with Re nu in [0, 1] classified as predicted", grid.len()));
    if !mismatches.is_empty() {
        r = r.note(format!("mismatches at {}", mismatches.join(", ")));
    }
    r
}

/// Energy pairs (E, E + 1.5) for E = 1, 2, …, 10.
pub fn prufer_energy_pairs() -> Vec<(f64, f64)> {
    (1..=10).map(|k| (k as f64, k as f64 + 1.5)).collect()
}

/// θ_{E₂}(x_max) ≥ θ_{E₁}(x_max) for every pair, at a = 0.5 on [0.01, 3].
pub fn prufer_monotonicity_check(form: PhaseForm) -> Result<AuditReport> {
    let pairs = prufer_energy_pairs();
    let phase = |e: f64| -> Result<f64> { Ok(prufer_integrate(&RadialProblem::new(e, 0.5, 1e-2, 3.0)?, form)?.final_phase()) };
    let mut held = 0;
    let mut worst = f64::INFINITY;
    for &(e1, e2) in &pairs {
        let gap = phase(e2)? - phase(e1)?;
        worst = worst.min(gap);
        if gap >= 0.0 {
            held += 1;
        }
    }
    let id = match form {
        PhaseForm::AsStated => "prufer_monotone",
        PhaseForm::Classical => "prufer_monotone_classical",
    };
    let verdict = if held == pairs.len() { Verdict::Pass } else { Verdict::Fail };
    Ok(AuditReport::with_verdict(id, Complex64::new(held as f64, 0.0), Complex64::new(pairs.len() as f64, 0.0), 0.0, verdict)
        .note(format!("{held} of {} energy pairs keep the phase ordered; smallest phase gap {worst:.6e}", pairs.len())))
}
