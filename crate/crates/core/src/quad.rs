//! Quadrature rules: Gauss–Legendre (double and double-double nodes),
//! adaptive composite Gauss–Legendre and double-exponential transforms.

use std::sync::OnceLock;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::dd::{Dd, DdComplex};
use crate::sum::{pairwise_sum, ComplexNeumaier};

/// Gauss–Legendre nodes and weights on [−1, 1] in double-double.
pub fn gauss_legendre_dd(n: usize) -> Vec<(Dd, Dd)> {
    assert!(n >= 1);
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        // Tricomi initial guess, then Newton in double-double
        let theta = std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5);
        let mut x = Dd::from_f64(theta.cos());
        let mut dp = Dd::ONE;
        for iter in 0..100 {
            let (p, d) = legendre_dd(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.hi.abs() < 1e-33 && iter > 2 {
                break;
            }
        }
        let (_, d) = legendre_dd(n, x);
        if d.hi != 0.0 {
            dp = d;
        }
        let w = Dd::from_f64(2.0) / ((Dd::ONE - x * x) * dp * dp);
        out.push((x, w));
    }
    out.reverse();
    out
}

fn legendre_dd(n: usize, x: Dd) -> (Dd, Dd) {
    let mut p0 = Dd::ONE;
    let mut p1 = x;
    for k in 1..n {
        let kf = k as f64;
        let p2 = (x * p1 * (2.0 * kf + 1.0) - p0 * kf) / (kf + 1.0);
        p0 = p1;
        p1 = p2;
    }
    let d = (x * p1 - p0) * n as f64 / (x * x - 1.0);
    (p1, d)
}

/// Gauss–Legendre nodes and weights on [−1, 1], rounded from double-double.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    gauss_legendre_dd(n)
        .into_iter()
        .map(|(x, w)| (x.to_f64(), w.to_f64()))
        .collect()
}

pub fn gl16() -> &'static [(f64, f64)] {
    static NODES: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    NODES.get_or_init(|| gauss_legendre(16))
}

pub fn gl16_dd() -> &'static [(Dd, Dd)] {
    static NODES: OnceLock<Vec<(Dd, Dd)>> = OnceLock::new();
    NODES.get_or_init(|| gauss_legendre_dd(16))
}

fn gl7() -> &'static [(f64, f64)] {
    static NODES: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    NODES.get_or_init(|| gauss_legendre(7))
}

/// Outcome of an integration: value, error estimate and the integral of |f|.
#[derive(Clone, Copy, Debug, Default)]
pub struct QuadResult {
    pub value: Complex64,
    pub error: f64,
    pub l1: f64,
}

/// One 16-point panel on [a, b]; also returns the integral of |f|.
pub fn gl_panel<F>(f: &F, a: f64, b: f64) -> (Complex64, f64)
where
    F: Fn(f64) -> Complex64 + ?Sized,
{
    let (v, l1) = gl_panel_n(&|t| [f(t)], a, b, gl16());
    (v[0], l1)
}

fn gl_panel_n<F, const N: usize>(f: &F, a: f64, b: f64, nodes: &[(f64, f64)]) -> ([Complex64; N], f64)
where
    F: Fn(f64) -> [Complex64; N] + ?Sized,
{
    let h = 0.5 * (b - a);
    let m = 0.5 * (a + b);
    let mut acc = [ComplexNeumaier::new(); N];
    let mut l1 = 0.0;
    for &(x, w) in nodes {
        let v = f(m + h * x);
        l1 += v[0].norm() * w;
        for (slot, vi) in acc.iter_mut().zip(v) {
            slot.add(vi * w);
        }
    }
    (acc.map(|c| c.value() * h), l1 * h.abs())
}

/// Adaptive bisection on one panel. The error estimate of a leaf compares the
/// 16-point rule with the 7-point rule on the same panel; only the first
/// component steers refinement, the others ride along on the same nodes.
pub fn adaptive_panel<F, const N: usize>(f: &F, a: f64, b: f64, tol: f64, depth: u32) -> QuadResultN<N>
where
    F: Fn(f64) -> [Complex64; N] + ?Sized,
{
    let (v16, l1) = gl_panel_n(f, a, b, gl16());
    let (v7, _) = gl_panel_n(f, a, b, gl7());
    let err = (v16[0] - v7[0]).norm();
    // the 7-point difference grossly overestimates a converged 16-point rule;
    // scaling by sqrt(err/mass) is the usual heuristic for spectral panels
    let scale = l1.max(1e-300);
    let est = err * (err / scale).min(1.0).sqrt();
    if est <= tol || depth == 0 {
        return QuadResultN { value: v16, error: est, l1, panels: 1 };
    }
    let m = 0.5 * (a + b);
    let left = adaptive_panel(f, a, m, 0.5 * tol, depth - 1);
    let right = adaptive_panel(f, m, b, 0.5 * tol, depth - 1);
    let mut value = left.value;
    for (v, r) in value.iter_mut().zip(right.value) {
        *v += r;
    }
    QuadResultN {
        value,
        error: left.error + right.error,
        l1: left.l1 + right.l1,
        panels: left.panels + right.panels,
    }
}

/// Vector-valued counterpart of [`QuadResult`].
#[derive(Clone, Copy, Debug)]
pub struct QuadResultN<const N: usize> {
    pub value: [Complex64; N],
    pub error: f64,
    pub l1: f64,
    pub panels: usize,
}

/// Composite adaptive Gauss–Legendre over the breakpoints `edges`.
///
/// Panels run in parallel; the reduction is a fixed-order pairwise sum so the
/// result does not depend on the thread count.
pub fn composite_gl<F>(f: &F, edges: &[f64], tol: f64, max_depth: u32) -> QuadResult
where
    F: Fn(f64) -> Complex64 + Sync + ?Sized,
{
    let r = composite_gl_n(&|t| [f(t)], edges, tol, max_depth);
    QuadResult { value: r.value[0], error: r.error, l1: r.l1 }
}

pub fn composite_gl_n<F, const N: usize>(f: &F, edges: &[f64], tol: f64, max_depth: u32) -> QuadResultN<N>
where
    F: Fn(f64) -> [Complex64; N] + Sync + ?Sized,
{
    let n = edges.len().saturating_sub(1).max(1);
    let per = tol / n as f64;
    let parts: Vec<QuadResultN<N>> = edges
        .par_windows(2)
        .map(|w| adaptive_panel(f, w[0], w[1], per, max_depth))
        .collect();
    let mut value = [Complex64::new(0.0, 0.0); N];
    for (i, v) in value.iter_mut().enumerate() {
        let comp: Vec<Complex64> = parts.iter().map(|p| p.value[i]).collect();
        *v = pairwise_sum(&comp);
    }
    QuadResultN {
        value,
        error: parts.iter().map(|p| p.error).sum(),
        l1: parts.iter().map(|p| p.l1).sum(),
        panels: parts.iter().map(|p| p.panels).sum(),
    }
}

/// Leaf panels chosen by the adaptive rule, in order; used to lay out a
/// finer fixed grid for the double-double pass.
pub fn adaptive_leaves<F>(f: &F, edges: &[f64], tol: f64, max_depth: u32) -> Vec<f64>
where
    F: Fn(f64) -> Complex64 + Sync + ?Sized,
{
    fn rec<F: Fn(f64) -> Complex64 + ?Sized>(f: &F, a: f64, b: f64, tol: f64, depth: u32, out: &mut Vec<f64>) {
        let (v16, l1) = gl_panel(f, a, b);
        let (v7, _) = gl_panel_n(&|t| [f(t)], a, b, gl7());
        let err = (v16 - v7[0]).norm();
        let est = err * (err / l1.max(1e-300)).min(1.0).sqrt();
        if est <= tol || depth == 0 {
            out.push(b);
            return;
        }
        let m = 0.5 * (a + b);
        rec(f, a, m, 0.5 * tol, depth - 1, out);
        rec(f, m, b, 0.5 * tol, depth - 1, out);
    }
    let n = edges.len().saturating_sub(1).max(1);
    let per = tol / n as f64;
    let chunks: Vec<Vec<f64>> = edges
        .par_windows(2)
        .map(|w| {
            let mut out = Vec::new();
            rec(f, w[0], w[1], per, max_depth, &mut out);
            out
        })
        .collect();
    let mut all = vec![edges[0]];
    for c in chunks {
        all.extend(c);
    }
    all
}

/// Composite fixed Gauss–Legendre in double-double over `edges`.
pub fn composite_gl_dd<F>(f: &F, edges: &[f64]) -> DdComplex
where
    F: Fn(Dd) -> DdComplex + Sync + ?Sized,
{
    composite_gl_dd_n(&|t| [f(t)], edges)[0]
}

pub fn composite_gl_dd_n<F, const N: usize>(f: &F, edges: &[f64]) -> [DdComplex; N]
where
    F: Fn(Dd) -> [DdComplex; N] + Sync + ?Sized,
{
    let parts: Vec<[DdComplex; N]> = edges
        .par_windows(2)
        .map(|w| {
            let a = Dd::from_f64(w[0]);
            let b = Dd::from_f64(w[1]);
            let h = (b - a).mul_pow2(-1);
            let m = (a + b).mul_pow2(-1);
            let mut acc = [DdComplex::ZERO; N];
            for &(x, wt) in gl16_dd() {
                let v = f(m + h * x);
                for (slot, vi) in acc.iter_mut().zip(v) {
                    *slot += vi.scale(wt);
                }
            }
            acc.map(|v| v.scale(h))
        })
        .collect();
    let mut out = [DdComplex::ZERO; N];
    for (i, o) in out.iter_mut().enumerate() {
        let comp: Vec<DdComplex> = parts.iter().map(|p| p[i]).collect();
        *o = dd_pairwise(&comp);
    }
    out
}

fn dd_pairwise(xs: &[DdComplex]) -> DdComplex {
    match xs.len() {
        0 => DdComplex::ZERO,
        1 => xs[0],
        n => dd_pairwise(&xs[..n / 2]) + dd_pairwise(&xs[n / 2..]),
    }
}

/// Tanh–sinh quadrature on a finite interval with level-halving error control.
pub fn tanh_sinh<F>(f: &F, a: f64, b: f64, tol: f64) -> QuadResult
where
    F: Fn(f64) -> Complex64 + ?Sized,
{
    let half = std::f64::consts::FRAC_PI_2;
    let r = 0.5 * (b - a);
    let t_max = 4.0;
    let mut h = 0.5;
    // distance to the nearer endpoint is formed directly to avoid cancellation
    let node = |t: f64| -> (f64, f64) {
        let u = half * t.sinh();
        let e = (-2.0 * u.abs()).exp();
        let gap = 2.0 * e / (1.0 + e);
        let x = if t >= 0.0 { b - r * gap } else { a + r * gap };
        let w = half * t.cosh() / u.cosh().powi(2);
        (x, w)
    };
    let eval = |t: f64, acc: &mut ComplexNeumaier, l1: &mut f64| {
        let (x, w) = node(t);
        if x > a && x < b || (t == 0.0) {
            let v = f(x) * w;
            *l1 += v.norm();
            acc.add(v);
        }
    };
    let mut acc = ComplexNeumaier::new();
    let mut l1 = 0.0;
    eval(0.0, &mut acc, &mut l1);
    let mut k = 1;
    while k as f64 * h <= t_max {
        eval(k as f64 * h, &mut acc, &mut l1);
        eval(-(k as f64) * h, &mut acc, &mut l1);
        k += 1;
    }
    let mut prev = acc.value() * h * r;
    let mut err = f64::INFINITY;
    for _level in 0..8 {
        h *= 0.5;
        let mut k = 1;
        while k as f64 * h <= t_max {
            eval(k as f64 * h, &mut acc, &mut l1);
            eval(-(k as f64) * h, &mut acc, &mut l1);
            k += 2;
        }
        let cur = acc.value() * h * r;
        err = (cur - prev).norm();
        prev = cur;
        if err <= tol {
            break;
        }
    }
    QuadResult { value: prev, error: err, l1: l1 * h * r.abs() }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl_nodes_are_symmetric_and_weights_sum_to_two() {
        let nodes = gauss_legendre(16);
        let s: f64 = nodes.iter().map(|p| p.1).sum();
        assert!((s - 2.0).abs() < 1e-15);
        for i in 0..8 {
            assert!((nodes[i].0 + nodes[15 - i].0).abs() < 1e-16);
        }
    }

    #[test]
    fn gl16_integrates_degree_31_exactly() {
        let f = |x: f64| Complex64::new(x.powi(30), 0.0);
        let (v, _) = gl_panel(&f, -1.0, 1.0);
        assert!((v.re - 2.0 / 31.0).abs() < 1e-15);
    }

    #[test]
    fn dd_nodes_integrate_polynomial_to_dd_accuracy() {
        let v = composite_gl_dd(&|x: Dd| DdComplex::real(x.powi(20)), &[0.0, 1.0]);
        assert!((v.re - Dd::ONE / 21.0).to_f64().abs() < 1e-30);
    }

    #[test]
    fn adaptive_handles_peaked_integrand() {
        let f = |x: f64| Complex64::new(1.0 / (x * x + 1e-4), 0.0);
        let r = composite_gl(&f, &[-1.0, 0.0, 1.0], 1e-12, 30);
        let exact = 2.0 * 100.0 * (100.0f64).atan();
        assert!((r.value.re - exact).abs() / exact < 1e-12);
    }

    #[test]
    fn tanh_sinh_endpoint_singularity() {
        let f = |x: f64| Complex64::new(1.0 / x.sqrt(), 0.0);
        let r = tanh_sinh(&f, 0.0, 1.0, 1e-12);
        assert!((r.value.re - 2.0).abs() < 1e-10, "{:?}", r);
    }
}
