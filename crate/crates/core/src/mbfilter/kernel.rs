//! Integrands of the three Mellin–Barnes kernels and their pole ladders.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::dd::{Dd, DdComplex};
use crate::specfun::ddfun::{dd_beta, dd_digamma, dd_ln_gamma, dd_zeta};
use crate::specfun::{
    completed_xi, digamma_unchecked, dirichlet_beta_unchecked, ln_gamma_unchecked, zeta_unchecked,
};

/// Arithmetic weight of the filter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kernel {
    /// (1/4πi) ∫ Γ(s) Γ(s−ν) (2a)^{2s} ζ(2s) ds
    Zeta2s,
    /// (1/2πi) ∫ Γ(s) Γ(s−ν) (2a)^{2s} β(2s) ds
    Beta2s,
    /// (1/2πi) ∫ Γ(s−ν) π^s (2a)^{2s} ξ(2s) / (2s(2s−1)) ds
    Xi2s,
}

impl Kernel {
    pub fn as_str(self) -> &'static str {
        match self {
            Kernel::Zeta2s => "zeta2s",
            Kernel::Beta2s => "beta2s",
            Kernel::Xi2s => "xi2s",
        }
    }

    /// Constant c with ψ = c ∫ f(g + it) dt, i.e. the prefactor times i.
    pub fn line_factor(self) -> f64 {
        match self {
            Kernel::Zeta2s => 1.0 / (4.0 * PI),
            Kernel::Beta2s | Kernel::Xi2s => 1.0 / (2.0 * PI),
        }
    }

    /// Poles of the integrand with real part in [lo, hi].
    pub fn poles(self, nu: Complex64, lo: f64, hi: f64) -> Vec<Complex64> {
        let mut out = Vec::new();
        let n_max = (hi.abs().max(lo.abs()) + nu.re.abs() + 2.0).ceil() as i64;
        let in_range = |p: Complex64| p.re >= lo && p.re <= hi;
        let push = |p: Complex64, out: &mut Vec<Complex64>| {
            if in_range(p) {
                out.push(p);
            }
        };
        for n in 0..=n_max {
            let shifted = nu - n as f64;
            push(shifted, &mut out);
            if self != Kernel::Xi2s {
                push(Complex64::new(-(n as f64), 0.0), &mut out);
            }
        }
        match self {
            Kernel::Zeta2s => push(Complex64::new(0.5, 0.0), &mut out),
            Kernel::Xi2s => {
                push(Complex64::new(0.0, 0.0), &mut out);
                push(Complex64::new(0.5, 0.0), &mut out);
            }
            Kernel::Beta2s => {}
        }
        out.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        out
    }
}

impl std::fmt::Display for Kernel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Kernel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "zeta2s" | "zeta" => Ok(Kernel::Zeta2s),
            "beta2s" | "beta" => Ok(Kernel::Beta2s),
            "xi2s" | "xi" => Ok(Kernel::Xi2s),
            other => Err(format!("unknown kernel `{other}`")),
        }
    }
}

/// Integrand at s, before the line factor.
pub fn integrand(kernel: Kernel, s: Complex64, nu: Complex64, ln2a: f64) -> Complex64 {
    let two_s = 2.0 * s;
    match kernel {
        Kernel::Zeta2s => {
            let l = ln_gamma_unchecked(s) + ln_gamma_unchecked(s - nu) + two_s * ln2a;
            l.exp() * zeta_unchecked(two_s)
        }
        Kernel::Beta2s => {
            let l = ln_gamma_unchecked(s) + ln_gamma_unchecked(s - nu) + two_s * ln2a;
            l.exp() * dirichlet_beta_unchecked(two_s)
        }
        Kernel::Xi2s => {
            let l = ln_gamma_unchecked(s - nu) + s * PI.ln() + two_s * ln2a;
            let xi = completed_xi(two_s).unwrap_or(Complex64::new(f64::NAN, f64::NAN));
            l.exp() * xi / (two_s * (two_s - 1.0))
        }
    }
}

/// Factor turning the integrand into its E-derivative: d/dE Γ(s−ν) with
/// ν = 1/2 + iE/2 equals −(i/2) ψ(s−ν) Γ(s−ν).
pub fn energy_derivative_factor(s: Complex64, nu: Complex64) -> Complex64 {
    Complex64::new(0.0, -0.5) * digamma_unchecked(s - nu)
}

/// Factor turning the integrand into its a-derivative: d/da (2a)^{2s} = (2s/a)(2a)^{2s}.
pub fn scale_derivative_factor(s: Complex64, a: f64) -> Complex64 {
    2.0 * s / a
}

/// Double-double integrand, with its E-derivative.
pub fn integrand_dd(kernel: Kernel, s: DdComplex, nu: DdComplex, ln2a: Dd) -> [DdComplex; 2] {
    let two_s = s * 2.0;
    let sm = s - nu;
    let base = match kernel {
        Kernel::Zeta2s | Kernel::Beta2s => {
            let l = dd_ln_gamma(s) + dd_ln_gamma(sm) + two_s.scale(ln2a);
            let w = if kernel == Kernel::Zeta2s { dd_zeta(two_s) } else { dd_beta(two_s) };
            l.exp() * w
        }
        Kernel::Xi2s => {
            // ξ(2s)/(2s(2s−1)) = ½ π^{−s} Γ(s) ζ(2s)
            let l = dd_ln_gamma(sm) + two_s.scale(ln2a);
            let lg = dd_ln_gamma(s);
            let pi_s = s.scale(Dd::PI.ln());
            let xi = (two_s * (two_s - 1.0) * (lg - pi_s).exp() * dd_zeta(two_s)) * 0.5;
            let pref = (l + pi_s).exp();
            pref * xi / (two_s * (two_s - 1.0))
        }
    };
    let dfac = DdComplex::new(Dd::ZERO, Dd::from_f64(-0.5)) * dd_digamma(sm);
    [base, base * dfac]
}
