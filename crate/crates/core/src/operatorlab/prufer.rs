//! Prüfer phase integration for ψ″ + (1/x)ψ′ + V(x)ψ = 0.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Smallest horizon cutoff accepted.
pub const MIN_X: f64 = 1e-4;
const LOCAL_TOL: f64 = 1e-10;

/// Radial equation x ψ″ + ψ′ + q(x) ψ = 0 with q(x) = (x + a⁻²)² + E².
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RadialProblem {
    pub nu: num_complex::Complex64,
    pub x_min: f64,
    pub x_max: f64,
    pub energy: f64,
    pub a: f64,
}

impl RadialProblem {
    pub fn new(energy: f64, a: f64, x_min: f64, x_max: f64) -> Result<Self> {
        if !(x_min >= MIN_X && x_min < x_max && x_max.is_finite()) {
            return Err(Error::InvalidParameter(format!("need 1e-4 <= x_min < x_max, got [{x_min}, {x_max}]")));
        }
        if !(a > 0.0) {
            return Err(Error::InvalidParameter(format!("scale a = {a}")));
        }
        Ok(RadialProblem { nu: crate::bessel::SpectralParameter::from_energy(energy).order, x_min, x_max, energy, a })
    }

    pub fn q(&self, x: f64) -> f64 {
        let s = x + 1.0 / (self.a * self.a);
        s * s + self.energy * self.energy
    }
}

/// Which phase equation to integrate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PhaseForm {
    /// θ′ = 1 − V sin²θ − (1/x) sinθ cosθ
    AsStated,
    /// θ′ = cos²θ + V sin²θ + (1/x) sinθ cosθ, from ψ = R sinθ, ψ′ = R cosθ
    Classical,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PruferState {
    pub x: f64,
    pub amplitude: f64,
    pub phase: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PruferTrajectory {
    pub states: Vec<PruferState>,
    pub form: PhaseForm,
}

impl PruferTrajectory {
    pub fn final_phase(&self) -> f64 {
        self.states.last().map_or(0.0, |s| s.phase)
    }

    pub fn phase_advance(&self) -> f64 {
        self.final_phase() - self.states.first().map_or(0.0, |s| s.phase)
    }

    /// ⌊(θ(b) − θ(a))/π⌋
    pub fn node_count(&self) -> i64 {
        (self.phase_advance() / std::f64::consts::PI).floor() as i64
    }
}

/// Right-hand side for (θ, log R).
fn rhs(form: PhaseForm, v: f64, damping: f64, th: f64) -> [f64; 2] {
    let (s, c) = th.sin_cos();
    match form {
        PhaseForm::AsStated => [1.0 - v * s * s - damping * s * c, v * s * c + damping * c * c],
        PhaseForm::Classical => [c * c + v * s * s + damping * s * c, (1.0 - v) * s * c - damping * c * c],
    }
}

// Dormand–Prince 5(4) tableau
const C: [f64; 7] = [0.0, 0.2, 0.3, 0.8, 8.0 / 9.0, 1.0, 1.0];
const A: [[f64; 6]; 7] = [
    [0.0; 6],
    [0.2, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0, 0.0, 0.0],
    [9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0, 0.0],
    [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0],
];
const B5: [f64; 7] = [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0, 0.0];
const B4: [f64; 7] = [
    5179.0 / 57600.0,
    0.0,
    7571.0 / 16695.0,
    393.0 / 640.0,
    -92097.0 / 339200.0,
    187.0 / 2100.0,
    1.0 / 40.0,
];

/// Adaptive Dormand–Prince integration of the phase equation for a general
/// potential. `damping` scales the (1/x) first-derivative term; 0 drops it.
pub fn prufer_integrate_potential<V>(
    v: &V,
    damping: f64,
    form: PhaseForm,
    x_min: f64,
    x_max: f64,
    theta0: f64,
) -> Result<PruferTrajectory>
where
    V: Fn(f64) -> f64,
{
    let f = |x: f64, y: [f64; 2]| rhs(form, v(x), damping / x, y[0]);
    let mut x = x_min;
    let mut y = [theta0, 0.0];
    let mut states = vec![PruferState { x, amplitude: 1.0, phase: theta0 }];
    let mut h = 1e-3 * (x_max - x_min);
    while x < x_max {
        h = h.min(x_max - x);
        let mut k = [[0.0; 2]; 7];
        k[0] = f(x, y);
        for i in 1..7 {
            let mut yi = y;
            for (j, kj) in k.iter().enumerate().take(i) {
                yi[0] += h * A[i][j] * kj[0];
                yi[1] += h * A[i][j] * kj[1];
            }
            k[i] = f(x + C[i] * h, yi);
        }
        let mut y5 = y;
        let mut err = 0.0f64;
        for comp in 0..2 {
            let mut d5 = 0.0;
            let mut d4 = 0.0;
            for i in 0..7 {
                d5 += B5[i] * k[i][comp];
                d4 += B4[i] * k[i][comp];
            }
            y5[comp] += h * d5;
            // the phase drives node counts; log R only rides along
            if comp == 0 {
                err = (h * (d5 - d4)).abs();
            }
        }
        if err <= LOCAL_TOL || h <= 1e-14 * x.max(1.0) {
            if err > LOCAL_TOL {
                return Err(Error::StepUnderflow(x));
            }
            x += h;
            y = y5;
            states.push(PruferState { x, amplitude: y[1].exp(), phase: y[0] });
        }
        let factor = if err == 0.0 { 5.0 } else { (0.9 * (LOCAL_TOL / err).powf(0.2)).clamp(0.2, 5.0) };
        h *= factor;
    }
    Ok(PruferTrajectory { states, form })
}

/// Phase trajectory of the radial problem with V = q/x, starting at θ = 0.
pub fn prufer_integrate(problem: &RadialProblem, form: PhaseForm) -> Result<PruferTrajectory> {
    prufer_integrate_potential(&|x| problem.q(x) / x, 1.0, form, problem.x_min, problem.x_max, 0.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn constant_potential_surrogates() {
        // θ′ = cos²θ from θ = 0 gives tan θ = x − 1
        let t = prufer_integrate_potential(&|_| 1.0, 0.0, PhaseForm::AsStated, 1.0, 1.0 + PI, 0.0).unwrap();
        assert!((t.final_phase() - PI.atan()).abs() < 1e-8);
        // θ′ = 1 for V = 1: exactly one half-turn per π
        let t = prufer_integrate_potential(&|_| 1.0, 0.0, PhaseForm::Classical, 1.0, 1.0 + PI, 0.0).unwrap();
        assert!((t.final_phase() - PI).abs() < 1e-8);
    }

    #[test]
    fn classical_phase_counts_bessel_nodes() {
        // ψ = J0(2√(kx)) solves xψ″ + ψ′ + kψ = 0; zeros of J0 at 2.4048, 5.5201, 8.6537
        let k = 4.0;
        let t = prufer_integrate_potential(&|x| k / x, 1.0, PhaseForm::Classical, 1e-4, 5.0, 0.5 * PI).unwrap();
        // 2√(4·5) = 8.944 passes three zeros
        assert_eq!((t.final_phase() / PI).floor(), 3.0);
    }

    #[test]
    fn energy_ordering_by_form() {
        let p1 = RadialProblem::new(2.0, 0.5, 1e-2, 3.0).unwrap();
        let p2 = RadialProblem::new(4.0, 0.5, 1e-2, 3.0).unwrap();
        let c1 = prufer_integrate(&p1, PhaseForm::Classical).unwrap().final_phase();
        let c2 = prufer_integrate(&p2, PhaseForm::Classical).unwrap().final_phase();
        assert!(c2 > c1);
        let s1 = prufer_integrate(&p1, PhaseForm::AsStated).unwrap().final_phase();
        let s2 = prufer_integrate(&p2, PhaseForm::AsStated).unwrap().final_phase();
        assert!(s2 < s1, "{s1} {s2}");
    }

    #[test]
    fn rejects_bad_domain() {
        assert!(RadialProblem::new(1.0, 0.2, 1e-5, 1.0).is_err());
        assert!(RadialProblem::new(1.0, 0.2, 1.0, 0.5).is_err());
    }
}
