//! Every audited identity under a stable id, evaluated into one ledger.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::report::{AuditReport, Verdict};
use crate::bessel::{asymptotic_validator, wronskian_check, Regime, SpectralParameter};
use crate::error::{Error, Result};
use crate::mbfilter::{
    contour_shift, double_pole_circle, hadamard_finite_part, mb_integral, mb_integral_scale_derivative,
    newton_filter_root, residue_corrected_shift, ContourSpec, Kernel, RindlerScale,
};
use crate::operatorlab::{
    deficiency_divergence_check, eigenfunction_l2_classifier, frobenius_grid_check, prufer_monotonicity_check, PhaseForm,
};
use crate::spectrostats::{
    density_peaks, fredholm_audit, oscillatory_density, pair_correlation, smooth_density, spacing_vs_gue,
    trace_class_audit, trace_i_of_a, unfold, weil_prime_side, OscillationSign, PairTable, DENSITY_SIGMA,
};
use crate::zerocensus::{bijection_audit, filter_root_search, n_h_guinand_weil, riemann_von_mangoldt, s_of_t_bound_check, Catalog};

/// Registered claims in ledger order, with a one-line description.
pub const CLAIMS: &[(&str, &str)] = &[
    ("contour_shift", "moving the zeta-kernel line inside a pole-free strip leaves the filter unchanged"),
    ("residue_shift", "crossing poles changes the filter by the enclosed residues"),
    ("double_pole_residue", "circle integral of A B/(s-s0)^2 equals 2 pi i A(s0) B'(s0)"),
    ("hadamard_finite_part", "finite part of the integral of 1/z^2 over [-1, 1] vanishes"),
    ("scale_derivative", "analytic a-derivative matches a centred difference"),
    ("small_a_limit", "filter on the line g = -1/4 tends to zero monotonically as a shrinks"),
    ("bessel_small_x", "K_nu(x) ~ (x/2)^(-|Re nu|) as x -> 0"),
    ("bessel_large_x", "x^(1/2) K_nu(x) decays like e^(-x)"),
    ("wronskian", "x W(K_nu, I_nu)(x) = 1"),
    ("s_of_t_bound", "|S(t)| <= 0.1038 log t + 0.2573 log log t + 8.3675 on [e, 200]"),
    ("riemann_von_mangoldt", "smooth count plus S(T) reproduces the catalog count"),
    ("guinand_weil_count", "the Gamma-form counting expression reproduces the catalog count at E/2"),
    ("filter_root_beta", "Newton on the beta filter from 12.0419 lands on 2 t_1"),
    ("bijection", "filter-root count equals zero count below E = 60"),
    ("frobenius_criterion", "limit circle at the origin iff Re nu < 1/2"),
    ("deficiency_log_divergence", "decade norms of J0 grow logarithmically"),
    ("eigenfunction_l2", "x |K_nu|^2 integrable at nu = 1.2"),
    ("prufer_monotone", "phase at the right end increases with energy"),
    ("prufer_monotone_classical", "same ordering for the phase equation derived from psi = R sin, psi' = R cos"),
    ("oscillatory_density", "peaks of the smooth plus prime-sum density sit on the first ten zeros"),
    ("oscillatory_density_classical", "same with the prime sum entering with a minus sign"),
    ("gue_spacing", "unfolded spacings follow the Wigner-Dyson law"),
    ("pair_correlation", "two-point function follows the sine kernel"),
    ("trace_i_of_a", "I(a) is purely imaginary"),
    ("weil_prime_side", "prime side of the explicit formula converges to the zero side"),
    ("trace_class", "sum (2 t_n + i)^-2 equals i^-2 (2a)^2 zeta(2)"),
    ("trace_class_p4", "sum (2 t_n + i)^-4 equals (2a)^4 zeta(4)"),
    ("fredholm_determinant", "-sum (2az)^2k zeta(4k)/k equals log(2^-z zeta(2z))"),
];

/// Parameters shared by the claims.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AuditConfig {
    pub a: f64,
    pub abscissa: f64,
    pub energy: f64,
    pub zero_cap: usize,
    pub prime_limit: u64,
    pub bijection_e_max: f64,
}

impl Default for AuditConfig {
    fn default() -> Self {
        AuditConfig { a: 0.2, abscissa: 0.6, energy: 10.0, zero_cap: 100, prime_limit: 1_000_000, bijection_e_max: 60.0 }
    }
}

/// All reports plus the tables behind the plots.
#[derive(Clone, Debug)]
pub struct Ledger {
    pub config: AuditConfig,
    pub reports: Vec<AuditReport>,
    /// Unfolded nearest-neighbour spacings of the catalog window.
    pub spacings: Vec<f64>,
    /// (ω, estimated R₂, sine kernel)
    pub pair_table: PairTable,
}

impl Ledger {
    /// Sorted-key JSON document.
    pub fn to_json(&self) -> Value {
        json!({
            "claims": self.reports.iter().map(AuditReport::to_json).collect::<Vec<_>>(),
            "config": serde_json::to_value(self.config).expect("plain config"),
            "summary": {
                "pass": self.count(Verdict::Pass),
                "fail": self.count(Verdict::Fail),
                "divergent": self.count(Verdict::Divergent),
                "inconclusive": self.count(Verdict::Inconclusive),
            },
        })
    }

    pub fn count(&self, v: Verdict) -> usize {
        self.reports.iter().filter(|r| r.verdict == v).count()
    }

    pub fn get(&self, id: &str) -> Option<&AuditReport> {
        self.reports.iter().find(|r| r.claim_id == id)
    }
}

/// ω grid for the two-point table.
pub fn omega_grid() -> Vec<f64> {
    (1..=60).map(|k| 0.05 * k as f64).collect()
}

fn need_catalog(catalog: Option<&Catalog>) -> Result<&Catalog> {
    catalog.ok_or(Error::IncompleteCatalog { covered: 0.0, required: 1.0 })
}

fn ordinates(catalog: Option<&Catalog>) -> Result<Vec<f64>> {
    Ok(need_catalog(catalog)?.ordinates())
}

fn worst_count(cfg_points: &[f64], counted: impl Fn(f64) -> Result<(f64, f64)>, id: &str) -> Result<AuditReport> {
    let mut worst: Option<(f64, f64, f64)> = None;
    for &t in cfg_points {
        let (value, count) = counted(t)?;
        if worst.is_none_or(|w| (value - count).abs() > (w.1 - w.2).abs()) {
            worst = Some((t, value, count));
        }
    }
    let (t, value, count) = worst.expect("non-empty probe list");
    let tol = 0.5 / count.abs().max(value.abs()).max(1.0);
    let verdict = if (value - count).abs() < 0.5 { Verdict::Pass } else { Verdict::Fail };
    Ok(AuditReport::with_verdict(id, Complex64::new(value, 0.0), Complex64::new(count, 0.0), tol, verdict)
        .note(format!("worst of {} probes at {t}; agreement within 1/2 required", cfg_points.len())))
}

fn evaluate(id: &str, cfg: &AuditConfig, catalog: Option<&Catalog>) -> Result<AuditReport> {
    let scale = RindlerScale::new(cfg.a)?;
    let nu = SpectralParameter::from_energy(cfg.energy);
    match id {
        "contour_shift" => {
            let (g1, g2) = (cfg.abscissa - 0.05, cfg.abscissa + 0.1);
            let (delta, bound) = contour_shift(Kernel::Zeta2s, nu, scale, g1, g2)?;
            let l = mb_integral(Kernel::Zeta2s, nu, scale, &ContourSpec::new(g1))?.value;
            let r = mb_integral(Kernel::Zeta2s, nu, scale, &ContourSpec::new(g2))?.value;
            let verdict = if delta < 1e-10 { Verdict::Pass } else { Verdict::Fail };
            Ok(AuditReport::with_verdict(id, l, r, 1e-10 / r.norm(), verdict)
                .note(format!("lines g = {g1:.4} and {g2:.4} at E = {}; |difference| {delta:.3e}, error budget {bound:.3e}", cfg.energy)))
        }
        "residue_shift" => {
            let r = residue_corrected_shift(Kernel::Zeta2s, nu, scale, 0.3, cfg.abscissa)?;
            Ok(AuditReport::compare(id, r.raw_difference, r.residue_term, 1e-6)
                .note(format!("{} poles crossed between g = 0.3 and {}", r.poles.len(), cfg.abscissa)))
        }
        "double_pole_residue" => Ok(double_pole_circle()),
        "hadamard_finite_part" => {
            let fp = hadamard_finite_part(&|_| Complex64::new(1.0, 0.0), 0.0, 1.0, &[0.2, 0.1, 0.05, 0.025])?;
            Ok(AuditReport::compare(id, fp, Complex64::new(0.0, 0.0), 1e-8)
                .note("symmetric excision of the double pole leaves -2/L, not 0; the claimed cancellation only removes odd terms"))
        }
        "scale_derivative" => {
            let c = ContourSpec::new(cfg.abscissa);
            let analytic = mb_integral_scale_derivative(Kernel::Zeta2s, nu, scale, &c)?;
            let h = 1e-5;
            let up = mb_integral(Kernel::Zeta2s, nu, RindlerScale::new(cfg.a + h)?, &c)?.value;
            let dn = mb_integral(Kernel::Zeta2s, nu, RindlerScale::new(cfg.a - h)?, &c)?.value;
            Ok(AuditReport::compare(id, analytic, (up - dn) / (2.0 * h), 1e-6).note("centred difference with step 1e-5"))
        }
        "small_a_limit" => {
            let ladder = [0.1, 0.05, 0.025, 0.0125];
            let mut mags = Vec::new();
            for a in ladder {
                mags.push(mb_integral(Kernel::Zeta2s, nu, RindlerScale::new(a)?, &ContourSpec::new(-0.25))?.value.norm());
            }
            let monotone = mags.windows(2).all(|w| w[1] < w[0]);
            let shown: Vec<String> = mags.iter().map(|m| format!("{m:.6e}")).collect();
            let verdict = if monotone { Verdict::Pass } else { Verdict::Fail };
            Ok(AuditReport::with_verdict(id, Complex64::new(mags[3], 0.0), Complex64::new(0.0, 0.0), 0.0, verdict)
                .note(format!("|filter| on g = -0.25 for a = 0.1, 0.05, 0.025, 0.0125: [{}]; (2a)^(2g) grows as a shrinks", shown.join(", "))))
        }
        "bessel_small_x" => Ok(asymptotic_validator(Complex64::new(0.3, 0.7), Regime::SmallX)),
        "bessel_large_x" => Ok(asymptotic_validator(Complex64::new(0.5, 4.0), Regime::LargeX)),
        "wronskian" => {
            let orders = [Complex64::new(0.3, 0.0), Complex64::new(0.5, 5.0), Complex64::new(1.2, -2.0), Complex64::new(2.5, 0.5)];
            let mut worst: f64 = 0.0;
            for nu in orders {
                for x in [0.5, 2.0, 8.0] {
                    worst = worst.max(wronskian_check(nu, x)?);
                }
            }
            let verdict = if worst < 1e-7 { Verdict::Pass } else { Verdict::Fail };
            Ok(AuditReport::with_verdict(id, Complex64::new(1.0 + worst, 0.0), Complex64::new(1.0, 0.0), 1e-7, verdict)
                .note(format!("max |x W - 1| = {worst:.3e} over 4 orders and x in {{0.5, 2, 8}}")))
        }
        "s_of_t_bound" => Ok(s_of_t_bound_check(200.0)),
        "riemann_von_mangoldt" => {
            let c = need_catalog(catalog)?;
            let top = c.coverage().min(200.0);
            let probes: Vec<f64> = [0.1, 0.3, 0.5, 0.7, 0.9, 1.0].iter().map(|f| 15.0 + f * (top - 15.0)).collect();
            worst_count(&probes, |t| {
                let r = riemann_von_mangoldt(t, c)?;
                Ok((r.total, r.jump_count as f64))
            }, id)
        }
        "guinand_weil_count" => {
            let c = need_catalog(catalog)?;
            let top = 2.0 * c.coverage().min(200.0);
            let probes: Vec<f64> = [0.1, 0.25, 0.5, 0.75, 1.0].iter().map(|f| 30.0 + f * (top - 30.0)).collect();
            worst_count(&probes, |e| Ok((n_h_guinand_weil(e)?, c.count_up_to(e / 2.0) as f64)), id)
        }
        "filter_root_beta" => {
            let want = 2.0 * 6.020_948_904_7;
            let c = ContourSpec::new(0.75);
            Ok(match newton_filter_root(Kernel::Beta2s, RindlerScale::new(0.2)?, &c, 12.0419) {
                Ok(root) => AuditReport::compare(id, root.energy, Complex64::new(want, 0.0), 1e-8 / want),
                Err(e) => AuditReport::with_verdict(id, Complex64::new(f64::NAN, 0.0), Complex64::new(want, 0.0), 1e-8 / want, Verdict::Fail)
                    .note(format!("Newton failed: {e}")),
            })
        }
        "bijection" => {
            let c = need_catalog(catalog)?;
            let seeds: Vec<f64> = c.ordinates().iter().map(|t| 2.0 * t + 0.05).collect();
            let search = filter_root_search(Kernel::Zeta2s, scale, &ContourSpec::new(cfg.abscissa), cfg.bijection_e_max, &seeds)?;
            let audit = bijection_audit(cfg.bijection_e_max, c, &search.roots)?;
            let n_h = *audit.n_h_values.last().unwrap_or(&0);
            let n_z = *audit.n_zeta_values.last().unwrap_or(&0);
            let mut r = AuditReport::with_verdict(id, Complex64::new(n_h as f64, 0.0), Complex64::new(n_z as f64, 0.0), 0.0, audit.verdict)
                .note(format!("{} real filter roots from {} seeds up to E = {}", search.roots.len(), search.seeds.len(), cfg.bijection_e_max));
            if let Some(e) = audit.first_failure {
                r = r.note(format!("first nonzero count difference at E = {e:.4}"));
            }
            Ok(r)
        }
        "frobenius_criterion" => Ok(frobenius_grid_check(50)),
        "deficiency_log_divergence" => Ok(deficiency_divergence_check()),
        "eigenfunction_l2" => Ok(eigenfunction_l2_classifier(Complex64::new(1.2, 0.0))),
        "prufer_monotone" => prufer_monotonicity_check(PhaseForm::AsStated),
        "prufer_monotone_classical" => prufer_monotonicity_check(PhaseForm::Classical),
        "oscillatory_density" | "oscillatory_density_classical" => {
            let zeros: Vec<f64> = ordinates(catalog)?.into_iter().take(10).collect();
            let sign = if id == "oscillatory_density" { OscillationSign::AsStated } else { OscillationSign::Classical };
            let hi = zeros.last().copied().unwrap_or(20.0) + 2.0;
            let grid: Vec<f64> = (0..).map(|k| 10.0 + 0.01 * k as f64).take_while(|t| *t <= hi).collect();
            let osc = oscillatory_density(&grid, 100_000, DENSITY_SIGMA, sign)?;
            let total: Vec<f64> = grid.iter().zip(&osc).map(|(t, o)| smooth_density(*t) + o).collect();
            let peaks = density_peaks(&grid, &total);
            let worst = zeros
                .iter()
                .map(|z| peaks.iter().map(|p| (p - z).abs()).fold(f64::INFINITY, f64::min))
                .fold(0.0, f64::max);
            let verdict = if zeros.len() == 10 && worst < 0.2 { Verdict::Pass } else { Verdict::Fail };
            Ok(AuditReport::with_verdict(id, Complex64::new(worst, 0.0), Complex64::new(0.0, 0.0), 0.2, verdict)
                .note(format!("largest distance from a zero to the nearest density peak; primes to 1e5, sigma {DENSITY_SIGMA}")))
        }
        "gue_spacing" | "pair_correlation" => {
            let c = need_catalog(catalog)?;
            let spectrum = unfold(&c.ordinates(), (0.0, c.coverage()))?;
            if id == "gue_spacing" {
                spacing_vs_gue(&spectrum)
            } else {
                Ok(pair_correlation(&spectrum, &omega_grid())?.0)
            }
        }
        "trace_i_of_a" => trace_i_of_a(cfg.a, &ordinates(catalog)?, cfg.zero_cap),
        "weil_prime_side" => Ok(weil_prime_side(cfg.prime_limit, &ordinates(catalog)?)?.0),
        "trace_class" => trace_class_audit(2.0, cfg.a, &ordinates(catalog)?, cfg.zero_cap),
        "trace_class_p4" => {
            let mut r = trace_class_audit(4.0, cfg.a, &ordinates(catalog)?, cfg.zero_cap)?;
            r.claim_id = id.to_string();
            Ok(r)
        }
        "fredholm_determinant" => fredholm_audit(0.4, cfg.a, 40),
        other => Err(Error::InvalidParameter(format!("unknown claim `{other}`"))),
    }
}

/// Evaluates one claim; numerical failures become inconclusive reports.
pub fn run_claim(id: &str, cfg: &AuditConfig, catalog: Option<&Catalog>) -> Result<AuditReport> {
    if !CLAIMS.iter().any(|(c, _)| *c == id) {
        return Err(Error::InvalidParameter(format!("unknown claim `{id}`")));
    }
    Ok(evaluate(id, cfg, catalog).unwrap_or_else(|e| {
        AuditReport::with_verdict(id, Complex64::new(f64::NAN, 0.0), Complex64::new(f64::NAN, 0.0), 0.0, Verdict::Inconclusive)
            .note(format!("evaluation error: {e}"))
    }))
}

/// Runs the selected claims (all when `only` is empty) in registry order.
pub fn run_audit(cfg: &AuditConfig, catalog: Option<&Catalog>, only: &[String]) -> Result<Ledger> {
    for id in only {
        if !CLAIMS.iter().any(|(c, _)| c == id) {
            return Err(Error::InvalidParameter(format!("unknown claim `{id}`")));
        }
    }
    let ids: Vec<&str> = CLAIMS.iter().map(|(c, _)| *c).filter(|c| only.is_empty() || only.iter().any(|o| o == c)).collect();
    let reports = ids.par_iter().map(|id| run_claim(id, cfg, catalog)).collect::<Result<Vec<_>>>()?;
    let (spacings, pair_table) = match catalog.map(|c| unfold(&c.ordinates(), (0.0, c.coverage()))) {
        Some(Ok(s)) => {
            let table = pair_correlation(&s, &omega_grid()).map(|r| r.1).unwrap_or_default();
            (s.spacings(), table)
        }
        _ => (Vec::new(), Vec::new()),
    };
    Ok(Ledger { config: *cfg, reports, spacings, pair_table })
}

