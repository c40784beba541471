//! Vertical-line quadrature of the filter kernels.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::kernel::{energy_derivative_factor, integrand, integrand_dd, scale_derivative_factor, Kernel};
use crate::bessel::SpectralParameter;
use crate::complex::Precision;
use crate::dd::{Dd, DdComplex};
use crate::error::{Error, Result};
use crate::quad::{adaptive_leaves, composite_gl_dd_n, composite_gl_n, tanh_sinh};
use crate::specfun::zeta_unchecked;

/// Smallest allowed distance between the line and a pole.
pub const POLE_MARGIN: f64 = 1e-6;
/// Discarded tails must stay below this fraction of the integrated |f|.
pub const TAIL_TOLERANCE: f64 = 1e-14;
const MAX_DEPTH: u32 = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QuadratureRule {
    GaussLegendre,
    TanhSinh,
}

/// A truncated vertical line Re s = abscissa, |Im s| ≤ t_max.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ContourSpec {
    pub abscissa: f64,
    pub t_max: f64,
    pub panel_count: usize,
    pub rule: QuadratureRule,
    /// Arithmetic used for the integrand and the reduction.
    pub precision: Precision,
}

impl ContourSpec {
    pub fn new(abscissa: f64) -> Self {
        ContourSpec {
            abscissa,
            t_max: 60.0,
            panel_count: 120,
            rule: QuadratureRule::GaussLegendre,
            precision: Precision::Double,
        }
    }

    pub fn with_precision(mut self, precision: Precision) -> Self {
        self.precision = precision;
        self
    }

    pub fn with_panels(mut self, panel_count: usize) -> Self {
        self.panel_count = panel_count;
        self
    }

    pub fn with_t_max(mut self, t_max: f64) -> Self {
        self.t_max = t_max;
        self
    }

    pub fn with_rule(mut self, rule: QuadratureRule) -> Self {
        self.rule = rule;
        self
    }
}

/// The scale a entering through (2a)^{2s}.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RindlerScale {
    a: f64,
}

impl RindlerScale {
    pub fn new(a: f64) -> Result<Self> {
        if !(a > 0.0 && a < 1.0) {
            return Err(Error::InvalidParameter(format!("scale a = {a} outside (0, 1)")));
        }
        // 2a < e holds automatically on (0, 1)
        Ok(RindlerScale { a })
    }

    pub fn a(self) -> f64 {
        self.a
    }

    pub fn ln_2a(self) -> f64 {
        (2.0 * self.a).ln()
    }
}

/// Filter value at one energy with its error budget.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FilterEvaluation {
    pub energy: f64,
    pub kernel: Kernel,
    pub value: Complex64,
    /// Bound on discarded tails + quadrature error + rounding floor.
    pub truncation_error: f64,
    pub contour: ContourSpec,
    /// ∫|integrand| dt times the line factor; the natural scale for `value`.
    pub l1_mass: f64,
    /// Full double-double value when that precision was requested.
    pub value_dd: Option<DdComplex>,
}

/// Raw line integral with optional derivative, for complex orders.
#[derive(Clone, Copy, Debug)]
pub struct LineIntegral {
    pub value: Complex64,
    pub derivative: Complex64,
    pub error: f64,
    pub l1: f64,
    pub tail: f64,
    pub value_dd: Option<DdComplex>,
}

fn check_line(kernel: Kernel, nu: Complex64, g: f64, t_max: f64) -> Result<()> {
    for p in kernel.poles(nu, g - 1.0, g + 1.0) {
        let d = (p.re - g).abs();
        if d < POLE_MARGIN && p.im.abs() <= t_max + 1.0 {
            return Err(Error::ContourOnPole { abscissa: g, distance: d });
        }
    }
    Ok(())
}

/// Stirling majorant of the integrand modulus on the line, before the line factor.
fn majorant(kernel: Kernel, g: f64, t: f64, nu: Complex64, ln2a: f64) -> f64 {
    let s = Complex64::new(g, t);
    let sm = s - nu;
    // |Γ(x+iy)| ≲ √(2π) |y|^{x−1/2} e^{−π|y|/2} for |y| ≥ 1
    let gam = |z: Complex64| -> f64 {
        let y = z.im.abs().max(1.0);
        (2.0 * PI).sqrt() * y.powf(z.re - 0.5) * (-PI * z.im.abs() / 2.0).exp() * 1.1
    };
    let sigma = 2.0 * g;
    let arith = if sigma > 1.05 {
        zeta_unchecked(Complex64::new(sigma, 0.0)).re
    } else {
        let y = (2.0 * t).abs() + 2.0;
        3.0 * y.powf(((1.0 - sigma) / 2.0).max(0.0) + 0.1) * y.ln()
    };
    let scale = (2.0 * g * ln2a).exp();
    match kernel {
        Kernel::Zeta2s | Kernel::Beta2s => gam(s) * gam(sm) * scale * arith,
        Kernel::Xi2s => {
            // equals ½|Γ(s)Γ(s−ν)ζ(2s)| (2a)^{2g}
            0.5 * gam(s) * gam(sm) * scale * arith
        }
    }
}

fn edges_for(kernel: Kernel, nu: Complex64, c: &ContourSpec) -> Vec<f64> {
    let n = c.panel_count.max(2);
    let mut e: Vec<f64> = (0..=n).map(|k| -c.t_max + 2.0 * c.t_max * k as f64 / n as f64).collect();
    // grade towards poles that sit close to the line
    for p in kernel.poles(nu, c.abscissa - 1.0, c.abscissa + 1.0) {
        let d = (p.re - c.abscissa).abs();
        if p.im.abs() < c.t_max {
            e.push(p.im);
            let mut r = d;
            while r < 2.0 {
                for x in [p.im - r, p.im + r] {
                    if x.abs() < c.t_max {
                        e.push(x);
                    }
                }
                r *= 2.0;
            }
        }
    }
    e.sort_by(f64::total_cmp);
    e.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
    e
}

/// Integrates one kernel along the line for a possibly complex order.
pub fn line_integral(
    kernel: Kernel,
    nu: Complex64,
    scale: RindlerScale,
    contour: &ContourSpec,
    with_derivative: bool,
) -> Result<LineIntegral> {
    line_integral_weighted(kernel, nu, scale, contour, with_derivative, false)
}

fn line_integral_weighted(
    kernel: Kernel,
    nu: Complex64,
    scale: RindlerScale,
    contour: &ContourSpec,
    with_derivative: bool,
    scale_weight: bool,
) -> Result<LineIntegral> {
    let g = contour.abscissa;
    if !(contour.t_max > 0.0 && contour.panel_count > 0 && g.is_finite()) {
        return Err(Error::InvalidParameter("contour needs t_max > 0 and panels > 0".into()));
    }
    check_line(kernel, nu, g, contour.t_max)?;
    let ln2a = scale.ln_2a();
    let a = scale.a();
    let lf = kernel.line_factor();
    let f = |t: f64| -> [Complex64; 2] {
        let s = Complex64::new(g, t);
        let mut v = integrand(kernel, s, nu, ln2a);
        if scale_weight {
            v *= scale_derivative_factor(s, a);
        }
        let d = if with_derivative { v * energy_derivative_factor(s, nu) } else { Complex64::new(0.0, 0.0) };
        [v, d]
    };
    let edges = edges_for(kernel, nu, contour);
    // coarse pass fixes the absolute tolerance relative to the mass
    let coarse = composite_gl_n(&f, &edges, f64::INFINITY, 0);
    let tol = 1e-15 * coarse.l1.max(f64::MIN_POSITIVE);
    let (value, deriv, err, l1) = match contour.rule {
        QuadratureRule::GaussLegendre => {
            let r = composite_gl_n(&f, &edges, tol, MAX_DEPTH);
            (r.value[0], r.value[1], r.error, r.l1)
        }
        QuadratureRule::TanhSinh => {
            let mut v = Complex64::new(0.0, 0.0);
            let mut d = Complex64::new(0.0, 0.0);
            let mut err = 0.0;
            let mut l1 = 0.0;
            for w in edges.windows(2) {
                let rv = tanh_sinh(&|t| f(t)[0], w[0], w[1], tol / edges.len() as f64);
                v += rv.value;
                err += rv.error;
                l1 += rv.l1;
                if with_derivative {
                    d += tanh_sinh(&|t| f(t)[1], w[0], w[1], tol / edges.len() as f64).value;
                }
            }
            (v, d, err, l1)
        }
    };
    let tail = (majorant(kernel, g, contour.t_max, nu, ln2a) + majorant(kernel, g, -contour.t_max, nu, ln2a)) / PI;
    let rounding = 4.0 * f64::EPSILON * l1;
    if tail > TAIL_TOLERANCE * l1 {
        return Err(Error::TailBoundViolated { tail: tail * lf, tolerance: TAIL_TOLERANCE * l1 * lf, t_max: contour.t_max });
    }
    let mut out = LineIntegral {
        value: value * lf,
        derivative: deriv * lf,
        error: (err + tail + rounding) * lf,
        l1: l1 * lf,
        tail: tail * lf,
        value_dd: None,
    };
    if contour.precision == Precision::DoubleDouble {
        if scale_weight {
            return Err(Error::InvalidParameter("scale derivative is double precision only".into()));
        }
        let leaves = adaptive_leaves(&|t| f(t)[0], &edges, tol, MAX_DEPTH);
        // each double-accurate leaf split in two roughly squares its accuracy
        let mut fine = Vec::with_capacity(2 * leaves.len());
        for w in leaves.windows(2) {
            fine.push(w[0]);
            fine.push(0.5 * (w[0] + w[1]));
        }
        fine.push(*leaves.last().expect("non-empty leaves"));
        let gd = Dd::from_f64(g);
        let nud = DdComplex::from_c64(nu);
        let ln2a_dd = Dd::from_f64(2.0 * a).ln();
        let fd = |t: Dd| -> [DdComplex; 2] {
            let s = DdComplex::new(gd, t);
            integrand_dd(kernel, s, nud, ln2a_dd)
        };
        let [v, d] = composite_gl_dd_n(&fd, &fine);
        let lfd = match kernel {
            Kernel::Zeta2s => (Dd::PI * 4.0).recip(),
            _ => (Dd::PI * 2.0).recip(),
        };
        let v = v.scale(lfd);
        out.value = v.to_c64();
        out.derivative = d.scale(lfd).to_c64();
        out.value_dd = Some(v);
        out.error = (tail + 1e-30 * l1) * lf + 1e-3 * err * lf * (err / l1.max(1e-300)).min(1.0);
    }
    Ok(out)
}

/// The filter value at real energy E.
pub fn mb_integral(
    kernel: Kernel,
    nu: SpectralParameter,
    scale: RindlerScale,
    contour: &ContourSpec,
) -> Result<FilterEvaluation> {
    let r = line_integral(kernel, nu.order, scale, contour, false)?;
    Ok(FilterEvaluation {
        energy: nu.energy,
        kernel,
        value: r.value,
        truncation_error: r.error,
        contour: *contour,
        l1_mass: r.l1,
        value_dd: r.value_dd,
    })
}

/// ∂ψ/∂a from the analytic weight (2s/a)(2a)^{2s} under the integral.
pub fn mb_integral_scale_derivative(
    kernel: Kernel,
    nu: SpectralParameter,
    scale: RindlerScale,
    contour: &ContourSpec,
) -> Result<Complex64> {
    let c = contour.with_precision(Precision::Double);
    Ok(line_integral_weighted(kernel, nu.order, scale, &c, false, true)?.value)
}

/// |ψ(g1) − ψ(g2)| for a pole-free strip between the abscissae.
pub fn contour_shift_delta(
    kernel: Kernel,
    nu: SpectralParameter,
    scale: RindlerScale,
    g1: f64,
    g2: f64,
) -> Result<f64> {
    Ok(contour_shift(kernel, nu, scale, g1, g2)?.0)
}

/// Returns the shift together with max(1e-10, 20·(e1 + e2)), the contract bound.
pub fn contour_shift(
    kernel: Kernel,
    nu: SpectralParameter,
    scale: RindlerScale,
    g1: f64,
    g2: f64,
) -> Result<(f64, f64)> {
    let (lo, hi) = (g1.min(g2), g1.max(g2));
    if let Some(p) = kernel.poles(nu.order, lo - POLE_MARGIN, hi + POLE_MARGIN).first() {
        return Err(Error::PoleInStrip { pole: *p });
    }
    if g1 == g2 {
        return Ok((0.0, 1e-10));
    }
    let a = mb_integral(kernel, nu, scale, &ContourSpec::new(g1))?;
    let b = mb_integral(kernel, nu, scale, &ContourSpec::new(g2))?;
    let bound = (20.0 * (a.truncation_error + b.truncation_error)).max(1e-10);
    Ok(((a.value - b.value).norm(), bound))
}

/// Outcome of moving the line across poles.
#[derive(Clone, Debug)]
pub struct ResidueShift {
    pub poles: Vec<Complex64>,
    /// ψ(g_high) − ψ(g_low)
    pub raw_difference: Complex64,
    /// Line factor × 2πi × Σ residues, from small-circle integration.
    pub residue_term: Complex64,
    /// |raw_difference − residue_term|
    pub corrected_delta: f64,
}

/// Residue of the kernel integrand at `p` by trapezoidal integration on a
/// circle of radius `r` (spectrally accurate for analytic periodic data).
pub fn circle_residue(kernel: Kernel, nu: Complex64, scale: RindlerScale, p: Complex64, r: f64) -> Complex64 {
    let n = 64;
    let ln2a = scale.ln_2a();
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..n {
        let th = 2.0 * PI * k as f64 / n as f64;
        let w = Complex64::from_polar(r, th);
        acc += integrand(kernel, p + w, nu, ln2a) * w;
    }
    acc / n as f64
}

/// ψ(g_high) − ψ(g_low) compared with the enclosed residues.
pub fn residue_corrected_shift(
    kernel: Kernel,
    nu: SpectralParameter,
    scale: RindlerScale,
    g1: f64,
    g2: f64,
) -> Result<ResidueShift> {
    let (lo, hi) = (g1.min(g2), g1.max(g2));
    let poles = kernel.poles(nu.order, lo, hi);
    let all = kernel.poles(nu.order, lo - 2.0, hi + 2.0);
    let mut residues = Complex64::new(0.0, 0.0);
    for &p in &poles {
        let mut r: f64 = 0.05;
        for &q in &all {
            if q != p {
                r = r.min(0.4 * (q - p).norm());
            }
        }
        r = r.min(0.4 * (p.re - lo).abs()).min(0.4 * (hi - p.re).abs());
        residues += circle_residue(kernel, nu.order, scale, p, r);
    }
    let a = mb_integral(kernel, nu, scale, &ContourSpec::new(hi))?;
    let b = mb_integral(kernel, nu, scale, &ContourSpec::new(lo))?;
    let raw = a.value - b.value;
    let term = kernel.line_factor() * 2.0 * PI * residues;
    Ok(ResidueShift { poles, raw_difference: raw, residue_term: term, corrected_delta: (raw - term).norm() })
}
