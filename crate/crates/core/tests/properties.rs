use std::f64::consts::PI;

use mbzeta::bessel::{bessel_k, wronskian_check};
use mbzeta::mbfilter::contour_shift_delta;
use mbzeta::operatorlab::{eigenfunction_l2_classifier, frobenius_classify};
use mbzeta::specfun::{completed_xi, dirichlet_beta, gamma, zeta};
use mbzeta::spectrostats::{trace_i_of_a, unfold};
use mbzeta::zerocensus::{scan_zeros, Catalog, LFunction, ZeroMethod, ZeroRecord};
use mbzeta::{Kernel, RindlerScale, SpectralParameter};
use num_complex::Complex64;
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm().max(a.norm()).max(1e-300)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn zeta_and_gamma_commute_with_conjugation(sigma in 0.01f64..0.99, t in -50.0f64..50.0) {
        let s = c(sigma, t);
        prop_assert!(rel(zeta(s.conj()).unwrap(), zeta(s).unwrap().conj()) < 1e-12);
        prop_assert!(rel(gamma(s.conj()).unwrap(), gamma(s).unwrap().conj()) < 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn gamma_reflection(sigma in -3.0f64..3.0, t in -5.0f64..5.0) {
        let s = c(sigma, t);
        prop_assume!((s - s.re.round()).norm() > 0.05);
        let lhs = gamma(s).unwrap() * gamma(1.0 - s).unwrap() * (PI * s).sin() / PI;
        prop_assert!((lhs - 1.0).norm() < 1e-11, "{}", lhs);
    }

    #[test]
    fn bessel_order_symmetry(re in -3.0f64..3.0, im in -20.0f64..20.0, x in 0.1f64..20.0) {
        let a = bessel_k(c(re, im), x).unwrap().value;
        let b = bessel_k(c(-re, -im), x).unwrap().value;
        prop_assert!(rel(a, b) < 1e-10, "{} vs {}", a, b);
    }

    #[test]
    fn bessel_conjugation(re in -3.0f64..3.0, im in -20.0f64..20.0, x in 0.1f64..20.0) {
        let a = bessel_k(c(re, -im), x).unwrap().value;
        let b = bessel_k(c(re, im), x).unwrap().value.conj();
        prop_assert!(rel(a, b) < 1e-10);
    }

    #[test]
    fn wronskian_is_one_over_x(re in 0.0f64..2.0, im in -10.0f64..10.0, x in 0.2f64..10.0) {
        let r = wronskian_check(c(re, im), x).unwrap();
        prop_assert!(r < 1e-7, "residual {}", r);
    }

    #[test]
    fn bessel_ode_residual(re in 0.0f64..2.0, im in -6.0f64..6.0, x in 0.5f64..10.0) {
        let nu = c(re, im);
        let k = |y: f64| bessel_k(nu, y).unwrap().value;
        let k0 = k(x);
        // centred differences at h and h/2 combined by one Richardson step
        let diffs = |h: f64| {
            let (km, kp) = (k(x - h), k(x + h));
            ((kp - km) / (2.0 * h), (kp - 2.0 * k0 + km) / (h * h))
        };
        let h = 2e-3 * x;
        let (d1a, d2a) = diffs(h);
        let (d1b, d2b) = diffs(0.5 * h);
        let d1 = (4.0 * d1b - d1a) / 3.0;
        let d2 = (4.0 * d2b - d2a) / 3.0;
        let res = x * x * d2 + x * d1 - (x * x + nu * nu) * k0;
        prop_assert!(res.norm() < 1e-6 * k0.norm().max(1.0), "{}", res.norm());
    }

    #[test]
    fn frobenius_verdicts_agree(re in -1.5f64..1.5, im in -10.0f64..10.0) {
        prop_assume!((re.abs() - 0.5).abs() > 1e-6);
        prop_assert!(frobenius_classify(c(re, im)).agree());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn contour_independence(e in 2.0f64..30.0, a in 0.1f64..0.5, g1 in 0.55f64..1.2, g2 in 0.55f64..1.2) {
        let d = contour_shift_delta(Kernel::Zeta2s, SpectralParameter::from_energy(e), RindlerScale::new(a).unwrap(), g1, g2).unwrap();
        prop_assert!(d < 1e-10, "delta {}", d);
    }

    #[test]
    fn l2_classifier_is_even_in_order(re in -1.5f64..1.5, im in -5.0f64..5.0) {
        let a = eigenfunction_l2_classifier(c(re, im));
        let b = eigenfunction_l2_classifier(c(-re, -im));
        prop_assert_eq!(a.verdict, b.verdict);
        prop_assert!((a.lhs - b.lhs).norm() <= 1e-9 * a.lhs.norm().max(1.0));
    }

    #[test]
    fn catalog_text_round_trip(raw in proptest::collection::vec(1.0f64..200.0, 1..40)) {
        let mut ts = raw;
        ts.sort_by(f64::total_cmp);
        ts.dedup();
        let records: Vec<ZeroRecord> = ts
            .iter()
            .enumerate()
            .map(|(i, &t)| ZeroRecord { index: i + 1, ordinate: t, residual: 1e-13, function: LFunction::Beta, method: ZeroMethod::NewtonRefine })
            .collect();
        let cat = Catalog::new(LFunction::Beta, records);
        let back = Catalog::from_text(&cat.to_text()).unwrap();
        prop_assert_eq!(back.records, cat.records);
    }
}

#[test]
fn xi_symmetry_on_grid() {
    for i in 0..20 {
        for j in 0..20 {
            let s = c(0.025 + 0.05 * i as f64, -40.0 + 4.0 * j as f64 + 0.1);
            let a = completed_xi(s).unwrap();
            let b = completed_xi(1.0 - s).unwrap();
            assert!((a - b).norm() / a.norm() < 1e-11, "s = {s}");
        }
    }
}

#[test]
fn beta_functional_equation() {
    // β(1−s) = (π/2)^{−s} sin(πs/2) Γ(s) β(s)
    for j in 0..=40 {
        let s = c(0.3, -40.0 + 2.0 * j as f64);
        let lhs = dirichlet_beta(1.0 - s).unwrap();
        let rhs = (-s * (PI / 2.0).ln()).exp() * (PI * s / 2.0).sin() * gamma(s).unwrap() * dirichlet_beta(s).unwrap();
        assert!(rel(lhs, rhs) < 1e-11, "t = {}", s.im);
    }
}

#[test]
fn unfolded_windows_have_unit_spacing() {
    let zeros = scan_zeros(LFunction::Zeta, 200.0).unwrap();
    let ts: Vec<f64> = zeros.iter().map(|r| r.ordinate).collect();
    let first50 = unfold(&ts, (0.0, ts[49] + 1e-9)).unwrap();
    assert!((first50.mean_spacing() - 1.0).abs() < 0.1);
    let all = unfold(&ts, (0.0, 200.0)).unwrap();
    assert!((all.mean_spacing() - 1.0).abs() < 0.1);
    // a tiny translation acts through the smooth term only
    let shifted: Vec<f64> = ts.iter().map(|t| t + 1e-6).collect();
    let moved = unfold(&shifted, (0.0, 200.0)).unwrap();
    for (i, (a, b)) in all.spacings().iter().zip(moved.spacings()).enumerate() {
        // change is δ (ρ̄(t_{i+1}) − ρ̄(t_i)) ≤ δ ρ̄′(t_i) (t_{i+1} − t_i)
        let gap = ts[i + 1] - ts[i];
        let bound = 1e-6 * gap / (2.0 * PI * ts[i]) + 1e-12;
        assert!((a - b).abs() < bound, "spacing {i}: {}", (a - b).abs());
    }
}

#[test]
fn even_part_ignores_catalog_order() {
    let zeros = scan_zeros(LFunction::Zeta, 100.0).unwrap();
    let ts: Vec<f64> = zeros.iter().map(|r| r.ordinate).collect();
    let mut rev = ts.clone();
    rev.reverse();
    let a = trace_i_of_a(0.3, &ts, 100).unwrap();
    let b = trace_i_of_a(0.3, &rev, 100).unwrap();
    assert_eq!(a.lhs, b.lhs);
}
