//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use mbzeta::bessel::{bessel_k, wronskian_check};
use mbzeta::complex::Complex64;
use mbzeta::mbfilter::{contour_shift_delta, newton_filter_root};
use mbzeta::operatorlab::{deficiency_divergence_check, frobenius_grid_check, prufer_monotonicity_check};
use mbzeta::specfun::{completed_xi, gamma, zeta};
use mbzeta::spectrostats::{ks_wigner_dyson, levels_from_spacings, sample_poisson, sample_wigner_dyson, spacing_vs_gue};
use mbzeta::zerocensus::{bijection_audit, filter_root_search, riemann_von_mangoldt, s_of_t_bound_check, scan_zeros, Catalog};
use mbzeta::{ContourSpec, Kernel, LFunction, PhaseForm, Precision, RindlerScale, SpectralParameter, Verdict};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const BETA_TABLE: [f64; 4] = [6.020_948_904_7, 10.243_770_304, 12.988_098_012, 16.342_607_105];
const TABLE_TOL: f64 = 1e-9;
const ROOT_TOL_DOUBLE: f64 = 1e-8;
const ROOT_TOL_DD: f64 = 1e-10;
const SHIFT_TOL: f64 = 1e-10;
const XI_TOL: f64 = 1e-11;
const K_SYMMETRY_TOL: f64 = 1e-10;
const CONJ_TOL: f64 = 1e-12;
const WRONSKIAN_TOL: f64 = 1e-7;
const RVM_TOL: f64 = 0.5;
const KS_SELF_TOL: f64 = 0.02;
const SEED: u64 = 20_240_611;

struct Outcome {
    pass: bool,
    detail: String,
}

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_mbzeta")
}

fn mbzeta(args: &[&str], dir: &Path) -> std::process::Output {
    Command::new(bin()).args(args).arg("--out").arg(dir).output().expect("binary runs")
}

fn within(budget: Duration, start: Instant) -> (bool, String) {
    let t = start.elapsed();
    (t <= budget, format!("{:.1}s of {}s", t.as_secs_f64(), budget.as_secs()))
}

fn zeta_catalog() -> Catalog {
    Catalog::scanned(LFunction::Zeta, scan_zeros(LFunction::Zeta, 200.0).expect("zeta census"), 200.0)
}

fn beta_census_table() -> Outcome {
    let start = Instant::now();
    let dir = tempfile::tempdir().unwrap();
    let out = mbzeta(&["census", "--function", "beta", "--t-max", "17", "--threads", "1"], dir.path());
    let stdout = String::from_utf8_lossy(&out.stdout);
    let rows: Vec<f64> = stdout
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim_start().starts_with("index"))
        .filter_map(|l| l.split_whitespace().nth(1)?.parse().ok())
        .collect();
    let worst = rows.iter().zip(BETA_TABLE).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    let (fast, time) = within(Duration::from_secs(30), start);
    Outcome {
        pass: out.status.success() && rows.len() == 4 && worst < TABLE_TOL && fast,
        detail: format!("{} ordinates, max deviation {worst:.2e} (tol {TABLE_TOL:e}), {time}", rows.len()),
    }
}

fn beta_filter_roots() -> Outcome {
    let start = Instant::now();
    let scale = RindlerScale::new(0.2).unwrap();
    let mut parts = Vec::new();
    let mut pass = true;
    for (precision, tol) in [(Precision::Double, ROOT_TOL_DOUBLE), (Precision::DoubleDouble, ROOT_TOL_DD)] {
        let contour = ContourSpec::new(0.75).with_precision(precision);
        let mut ok = 0;
        let mut first_err = None;
        for t in BETA_TABLE {
            match newton_filter_root(Kernel::Beta2s, scale, &contour, 2.0 * t + 0.05) {
                Ok(r) if (r.energy.re - 2.0 * t).abs() < tol => ok += 1,
                Ok(r) => first_err = first_err.or(Some(format!("|E - 2t| = {:.2e}", (r.energy.re - 2.0 * t).abs()))),
                Err(e) => first_err = first_err.or(Some(e.to_string())),
            }
        }
        pass &= ok == 4;
        parts.push(format!("{}: {ok}/4 within {tol:e}{}", precision.tag(), first_err.map_or(String::new(), |e| format!(" (first failure: {e})"))));
    }
    let (fast, time) = within(Duration::from_secs(120), start);
    Outcome { pass: pass && fast, detail: format!("{}; {time}", parts.join("; ")) }
}

fn zeta_bijection() -> Outcome {
    let start = Instant::now();
    let cat = zeta_catalog();
    let seeds: Vec<f64> = cat.ordinates().iter().map(|t| 2.0 * t + 0.05).collect();
    let scale = RindlerScale::new(0.2).unwrap();
    let search = match filter_root_search(Kernel::Zeta2s, scale, &ContourSpec::new(0.6), 60.0, &seeds) {
        Ok(s) => s,
        Err(e) => return Outcome { pass: false, detail: format!("root search failed: {e}") },
    };
    let audit = bijection_audit(60.0, &cat, &search.roots).expect("catalog covers E/2 = 30");
    let nonzero = audit.delta_values.iter().filter(|d| **d != 0).count();
    let (fast, time) = within(Duration::from_secs(300), start);
    Outcome {
        pass: audit.verdict == Verdict::Pass && fast,
        detail: format!(
            "{} real roots, {} of {} grid points with nonzero difference{}; {time}",
            search.roots.len(),
            nonzero,
            audit.e_grid.len(),
            audit.first_failure.map_or(String::new(), |e| format!(", first at E = {e:.4}"))
        ),
    }
}

fn contour_shift_invariance() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut worst: f64 = 0.0;
    let mut errors = 0;
    for k in 0..20 {
        let kernel = if k % 2 == 0 { Kernel::Zeta2s } else { Kernel::Beta2s };
        let e = rng.gen_range(2.0..40.0);
        let a = rng.gen_range(0.1..0.5);
        let g1 = rng.gen_range(0.55..1.2);
        let g2 = rng.gen_range(0.55..1.2);
        match contour_shift_delta(kernel, SpectralParameter::from_energy(e), RindlerScale::new(a).unwrap(), g1, g2) {
            Ok(d) => worst = worst.max(d),
            Err(_) => errors += 1,
        }
    }
    let (fast, time) = within(Duration::from_secs(60), start);
    Outcome {
        pass: errors == 0 && worst < SHIFT_TOL && fast,
        detail: format!("20 pairs, max |delta| {worst:.2e} (tol {SHIFT_TOL:e}), {errors} errors; {time}"),
    }
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(1e-300)
}

fn special_function_properties() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 5);
    let n = 100;
    let (mut xi, mut ksym, mut conj, mut wr): (f64, f64, f64, f64) = (0.0, 0.0, 0.0, 0.0);
    for _ in 0..n {
        let s = Complex64::new(rng.gen_range(0.01..0.99), rng.gen_range(-50.0..50.0));
        xi = xi.max(rel(completed_xi(s).unwrap(), completed_xi(1.0 - s).unwrap()));
        conj = conj.max(rel(zeta(s.conj()).unwrap(), zeta(s).unwrap().conj()));
        conj = conj.max(rel(gamma(s.conj()).unwrap(), gamma(s).unwrap().conj()));
        let nu = Complex64::new(rng.gen_range(-3.0..3.0), rng.gen_range(-20.0..20.0));
        let x = rng.gen_range(0.1..20.0);
        let k = bessel_k(nu, x).unwrap().value;
        ksym = ksym.max(rel(bessel_k(-nu, x).unwrap().value, k));
        // K has its own conjugation tolerance, the same as the order symmetry
        ksym = ksym.max(rel(bessel_k(nu.conj(), x).unwrap().value, k.conj()));
        let nu_w = Complex64::new(rng.gen_range(0.0..2.0), rng.gen_range(-10.0..10.0));
        wr = wr.max(wronskian_check(nu_w, rng.gen_range(0.2..10.0)).unwrap());
    }
    let (fast, time) = within(Duration::from_secs(60), start);
    Outcome {
        pass: xi < XI_TOL && ksym < K_SYMMETRY_TOL && conj < CONJ_TOL && wr < WRONSKIAN_TOL && fast,
        detail: format!(
            "{n} samples each: xi {xi:.1e} (<{XI_TOL:e}), K order/conjugation {ksym:.1e} (<{K_SYMMETRY_TOL:e}), \
             zeta/Gamma conjugation {conj:.1e} (<{CONJ_TOL:e}), Wronskian {wr:.1e} (<{WRONSKIAN_TOL:e}); {time}"
        ),
    }
}

fn s_bound() -> Outcome {
    let start = Instant::now();
    let r = s_of_t_bound_check(200.0);
    let (fast, time) = within(Duration::from_secs(120), start);
    Outcome { pass: r.verdict == Verdict::Pass && fast, detail: format!("{}; {time}", r.notes) }
}

fn counting_agreement() -> Outcome {
    let start = Instant::now();
    let cat = zeta_catalog();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 7);
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let t = rng.gen_range(15.0..200.0);
        let r = riemann_von_mangoldt(t, &cat).expect("catalog covers 200");
        worst = worst.max((r.total - r.jump_count as f64).abs());
    }
    let (fast, time) = within(Duration::from_secs(60), start);
    Outcome { pass: worst < RVM_TOL && fast, detail: format!("50 heights, max |N_smooth + S - count| {worst:.2e} (tol {RVM_TOL}); {time}") }
}

fn statistics_and_ledger() -> Outcome {
    let gue = ks_wigner_dyson(&sample_wigner_dyson(10_000, SEED));
    let poisson = spacing_vs_gue(&levels_from_spacings(&sample_poisson(10_000, SEED))).unwrap();
    let self_tests = gue < KS_SELF_TOL && poisson.verdict == Verdict::Fail;

    let dir = tempfile::tempdir().unwrap();
    let census = mbzeta(&["census", "--t-max", "200"], dir.path());
    let mut ledgers = Vec::new();
    for threads in ["1", "4", "1"] {
        let out = mbzeta(&["audit", "--threads", threads], dir.path());
        ledgers.push((out.status.success(), std::fs::read(dir.path().join("ledger.json")).unwrap_or_default()));
    }
    let identical = ledgers.iter().all(|(ok, l)| *ok && !l.is_empty() && *l == ledgers[0].1);
    let json: serde_json::Value = serde_json::from_slice(&ledgers[0].1).unwrap_or(serde_json::Value::Null);
    let required = ["gue_spacing", "pair_correlation", "trace_i_of_a", "weil_prime_side", "trace_class", "fredholm_determinant"];
    let mut classified = Vec::new();
    for id in required {
        let entry = json["claims"].as_array().and_then(|cs| cs.iter().find(|c| c["claim_id"] == id));
        if let Some(c) = entry {
            if c["abs_discrepancy"].is_number() && c["verdict"].is_string() {
                classified.push(format!("{id}={}", c["verdict"].as_str().unwrap()));
            }
        }
    }
    let plots = ["spacing.gp", "spacing_hist.dat", "pair_correlation.gp", "pair_correlation.dat"].iter().all(|f| dir.path().join(f).exists());
    Outcome {
        pass: self_tests && census.status.success() && identical && classified.len() == required.len() && plots,
        detail: format!(
            "synthetic KS {gue:.4} (<{KS_SELF_TOL}), Poisson verdict {}; ledger identical across threads 1/4/1: {identical}; {}",
            poisson.verdict,
            classified.join(", ")
        ),
    }
}

fn operator_corollaries() -> Outcome {
    let start = Instant::now();
    let frob = frobenius_grid_check(50);
    let defic = deficiency_divergence_check();
    let prufer = prufer_monotonicity_check(PhaseForm::AsStated).expect("phase integration");
    let classical = prufer_monotonicity_check(PhaseForm::Classical).expect("phase integration");
    let (fast, time) = within(Duration::from_secs(120), start);
    Outcome {
        pass: frob.verdict == Verdict::Pass && defic.verdict == Verdict::Pass && prufer.verdict == Verdict::Pass && fast,
        detail: format!(
            "Frobenius grid {} ({}); deficiency slope fit {}; phase monotonicity {} ({}); derived phase form {}; {time}",
            frob.verdict,
            frob.notes,
            defic.verdict,
            prufer.verdict,
            prufer.notes,
            classical.verdict
        ),
    }
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        ("beta census reproduces the four tabulated ordinates", beta_census_table),
        ("beta filter Newton roots pair with 2t_n", beta_filter_roots),
        ("zeta filter-root count equals zero count for E <= 60", zeta_bijection),
        ("contour shifts inside pole-free strips", contour_shift_invariance),
        ("special-function property suite", special_function_properties),
        ("S(t) bound on [e, 200]", s_bound),
        ("smooth count plus S(T) matches the catalog", counting_agreement),
        ("statistics self-tests and deterministic ledger", statistics_and_ledger),
        ("operator-theory corollaries", operator_corollaries),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let o = f();
        if !o.pass {
            failed += 1;
        }
        println!("criterion {}: {} - {name}: {}", i + 1, if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
