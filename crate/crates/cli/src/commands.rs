use std::path::Path;

use mbzeta::audit::{run_audit, AuditConfig, CLAIMS};
use mbzeta::mbfilter::newton_filter_root;
use mbzeta::spectrostats::{pair_correlation, spacing_vs_gue, unfold};
use mbzeta::audit::omega_grid;
use mbzeta::zerocensus::{bijection_audit, filter_root_search, scan_zeros, Catalog};
use mbzeta::{AuditReport, ContourSpec, Error, Kernel, LFunction, Precision, RindlerScale};

use crate::output::{complex17, sig17, write_plots, write_text, Csv};
use crate::{Failure, RunConfig};

fn kernel_for(f: LFunction) -> Kernel {
    match f {
        LFunction::Zeta => Kernel::Zeta2s,
        LFunction::Beta => Kernel::Beta2s,
    }
}

fn load_catalog(path: &Path, function: LFunction) -> Result<Catalog, Failure> {
    if !path.exists() {
        return Err(Failure::new(
            4,
            format!("no catalog at {}; run `mbzeta census --function {function}` first or pass --cache", path.display()),
        ));
    }
    let cat = Catalog::load(path)?;
    if cat.function != function {
        return Err(Failure::new(1, format!("{} holds {} zeros, not {function}", path.display(), cat.function)));
    }
    Ok(cat)
}

fn contour(cfg: &RunConfig) -> ContourSpec {
    ContourSpec::new(cfg.abscissa).with_precision(cfg.precision)
}

pub fn census(cfg: &RunConfig) -> Result<(), Failure> {
    let records = match scan_zeros(cfg.function, cfg.t_max) {
        Ok(r) => r,
        Err(Error::MissedZeroSuspected { found, predicted, t_max, lo, hi }) => {
            return Err(Failure::new(
                2,
                format!("found {found} zeros below {t_max} but {predicted} are predicted; suspect interval [{lo}, {hi}]"),
            ))
        }
        Err(e) => return Err(e.into()),
    };
    println!("# {} zeros of {} with 0 < t <= {}", records.len(), cfg.function, cfg.t_max);
    println!("{:>5}  {:>24}  {:>24}", "index", "ordinate", "residual");
    for r in &records {
        println!("{:>5}  {:>24}  {:>24}", r.index, sig17(r.ordinate), sig17(r.residual));
    }
    if records.is_empty() {
        println!("# nothing to store");
        return Ok(());
    }
    let cat = Catalog::scanned(cfg.function, records, cfg.t_max);
    if let Some(dir) = cfg.cache.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| Failure::new(4, format!("cannot create {}: {e}", dir.display())))?;
    }
    cat.store(&cfg.cache)?;
    println!("# catalog written to {}", cfg.cache.display());
    Ok(())
}

fn pairing_tolerance(p: Precision) -> f64 {
    match p {
        Precision::Double => 1e-8,
        Precision::DoubleDouble => 1e-10,
    }
}

pub fn filter_roots(cfg: &RunConfig, guesses: &[f64]) -> Result<(), Failure> {
    let cat = load_catalog(&cfg.cache, cfg.function)?;
    let ordinates = cat.ordinates();
    let seeds: Vec<f64> = if guesses.is_empty() {
        ordinates.iter().map(|t| 2.0 * t + 0.05).filter(|e| cfg.e_max.is_none_or(|m| *e <= m)).collect()
    } else {
        guesses.to_vec()
    };
    if seeds.is_empty() {
        return Err(Failure::new(1, "no seeds: the catalog is empty below --e-max"));
    }
    let kernel = kernel_for(cfg.function);
    let scale = RindlerScale::new(cfg.a)?;
    let c = contour(cfg);
    let tol = pairing_tolerance(cfg.precision);
    let mut csv = Csv::new(
        &[
            format!("kernel {kernel}, a = {}, abscissa = {}, precision {}", cfg.a, cfg.abscissa, cfg.precision.tag()),
            "gap = |E_root - 2 * ordinate| for the nearest catalogued ordinate".into(),
        ],
        &["seed", "e_root", "ordinate", "gap", "iterations", "precision"],
    );
    let mut failures = Vec::new();
    let mut worst: f64 = 0.0;
    println!("{:>24}  {:>24}  {:>24}  {:>24}", "seed", "e_root", "ordinate", "gap");
    for &seed in &seeds {
        match newton_filter_root(kernel, scale, &c, seed) {
            Ok(root) => {
                let e = root.energy.re;
                let t = ordinates
                    .iter()
                    .copied()
                    .min_by(|x, y| (2.0 * x - e).abs().total_cmp(&(2.0 * y - e).abs()))
                    .unwrap_or(f64::NAN);
                let gap = (e - 2.0 * t).abs();
                worst = worst.max(gap);
                println!("{:>24}  {:>24}  {:>24}  {:>24}", sig17(seed), sig17(e), sig17(t), sig17(gap));
                csv.row(&[sig17(seed), sig17(e), sig17(t), sig17(gap), root.iterations.to_string(), cfg.precision.tag().into()]);
            }
            Err(err) => {
                println!("{:>24}  failed: {err}", sig17(seed));
                csv.comment(&format!("seed {} failed: {err}", sig17(seed)));
                failures.push(format!("seed {}: {err}", sig17(seed)));
            }
        }
    }
    let converged = seeds.len() - failures.len();
    let footer = format!(
        "{converged} of {} seeds converged; largest gap {}; all pairings below {tol:e}: {}",
        seeds.len(),
        if converged == 0 { "n/a".to_string() } else { sig17(worst) },
        if failures.is_empty() && worst < tol { "yes" } else { "no" }
    );
    csv.comment(&footer);
    let path = cfg.out.join(format!("filter_roots_{}.csv", cfg.function));
    csv.write(&path)?;
    println!("# {footer}");
    println!("# table written to {}", path.display());
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Failure::new(3, format!("{} Newton run(s) failed; first: {}", failures.len(), failures[0])))
    }
}

pub fn bijection(cfg: &RunConfig) -> Result<(), Failure> {
    let cat = load_catalog(&cfg.cache, cfg.function)?;
    let e_max = cfg.e_max.unwrap_or(60.0);
    let seeds: Vec<f64> = cat.ordinates().iter().map(|t| 2.0 * t + 0.05).collect();
    let search = filter_root_search(kernel_for(cfg.function), RindlerScale::new(cfg.a)?, &contour(cfg), e_max, &seeds)?;
    let audit = bijection_audit(e_max, &cat, &search.roots)?;
    let mut csv = Csv::new(
        &[
            format!("counting difference N_H(E) - N(E/2) for {} up to E = {e_max}", cfg.function),
            format!("{} real filter roots from {} Newton seeds", search.roots.len(), search.seeds.len()),
        ],
        &["energy", "n_h", "n_zeros", "delta"],
    );
    for i in 0..audit.e_grid.len() {
        csv.row(&[
            sig17(audit.e_grid[i]),
            audit.n_h_values[i].to_string(),
            audit.n_zeta_values[i].to_string(),
            audit.delta_values[i].to_string(),
        ]);
    }
    for o in &search.outcomes {
        csv.comment(o);
    }
    let path = cfg.out.join(format!("bijection_{}.csv", cfg.function));
    csv.write(&path)?;
    println!("roots found: {}", search.roots.len());
    for r in &search.roots {
        println!("  {}", sig17(*r));
    }
    println!("verdict: {}", audit.verdict);
    if let Some(e) = audit.first_failure {
        println!("first nonzero difference at E = {}", sig17(e));
    }
    println!("# table written to {}", path.display());
    Ok(())
}

fn print_report(r: &AuditReport) {
    println!(
        "{:<30} {:<12} lhs {}  rhs {}  rel {}",
        r.claim_id,
        r.verdict.as_str(),
        complex17(r.lhs),
        complex17(r.rhs),
        sig17(r.rel_discrepancy)
    );
    if !r.notes.is_empty() {
        println!("  {}", r.notes);
    }
}

pub fn stats(cfg: &RunConfig) -> Result<(), Failure> {
    let cat = load_catalog(&cfg.cache, cfg.function)?;
    let spectrum = unfold(&cat.ordinates(), (0.0, cat.coverage()))?;
    let spacing = spacing_vs_gue(&spectrum)?;
    let (pair, table) = pair_correlation(&spectrum, &omega_grid())?;
    print_report(&spacing);
    print_report(&pair);
    let mut sp = Csv::new(&[format!("{} zeros of {} unfolded by the smooth counting function", spectrum.raw.len(), cfg.function)], &["index", "ordinate", "unfolded", "spacing"]);
    let gaps = spectrum.spacings();
    for i in 0..spectrum.raw.len() {
        let gap = gaps.get(i).map_or(String::new(), |g| sig17(*g));
        sp.row(&[(i + 1).to_string(), sig17(spectrum.raw[i]), sig17(spectrum.unfolded[i]), gap]);
    }
    sp.write(&cfg.out.join("spacings.csv"))?;
    let mut pc = Csv::new(&["Gaussian window 0.1 in unfolded units".into()], &["omega", "r2_estimate", "sine_kernel"]);
    for (w, r, k) in &table {
        pc.row(&[sig17(*w), sig17(*r), sig17(*k)]);
    }
    pc.write(&cfg.out.join("pair_correlation.csv"))?;
    write_plots(&cfg.out, &gaps, &table)?;
    println!("# tables and plot scripts written to {}", cfg.out.display());
    Ok(())
}

pub fn audit(cfg: &RunConfig, list: bool) -> Result<(), Failure> {
    if list {
        for (id, what) in CLAIMS {
            println!("{id:<30} {what}");
        }
        return Ok(());
    }
    let zeta_cache = if cfg.function == LFunction::Zeta { cfg.cache.clone() } else { cfg.out.join("zeta.catalog") };
    let cat = load_catalog(&zeta_cache, LFunction::Zeta)?;
    let audit_cfg = AuditConfig { a: cfg.a, abscissa: cfg.abscissa, ..AuditConfig::default() };
    let ledger = run_audit(&audit_cfg, Some(&cat), &cfg.claims).map_err(|e| match e {
        Error::InvalidParameter(m) => Failure::new(1, m),
        other => other.into(),
    })?;
    let mut text = serde_json::to_string_pretty(&ledger.to_json()).map_err(|e| Failure::new(6, e.to_string()))?;
    text.push('\n');
    let path = cfg.out.join("ledger.json");
    write_text(&path, &text)?;
    write_plots(&cfg.out, &ledger.spacings, &ledger.pair_table)?;
    for r in &ledger.reports {
        print_report(r);
    }
    println!(
        "# {} claims: {} pass, {} fail, {} divergent, {} inconclusive; ledger at {}",
        ledger.reports.len(),
        ledger.count(mbzeta::Verdict::Pass),
        ledger.count(mbzeta::Verdict::Fail),
        ledger.count(mbzeta::Verdict::Divergent),
        ledger.count(mbzeta::Verdict::Inconclusive),
        path.display()
    );
    Ok(())
}

pub fn cache_inspect(cfg: &RunConfig) -> Result<(), Failure> {
    let text = std::fs::read_to_string(&cfg.cache)
        .map_err(|e| Failure::new(4, format!("cannot read {}: {e}", cfg.cache.display())))?;
    let cat = Catalog::from_text(&text)?;
    println!("path      {}", cfg.cache.display());
    println!("function  {}", cat.function);
    println!("version   {}", mbzeta::zerocensus::CATALOG_VERSION);
    println!("records   {}", cat.records.len());
    if let (Some(first), Some(last)) = (cat.records.first(), cat.records.last()) {
        println!("first     {}", sig17(first.ordinate));
        println!("last      {}", sig17(last.ordinate));
    }
    if let Some(line) = text.lines().last() {
        println!("checksum  {}", line.trim_start_matches("#sha256 "));
    }
    Ok(())
}

pub fn cache_verify(cfg: &RunConfig) -> Result<(), Failure> {
    if !cfg.cache.exists() {
        return Err(Failure::new(4, format!("no catalog at {}", cfg.cache.display())));
    }
    let cat = Catalog::load(&cfg.cache)?;
    println!("ok: {} records of {}, checksum verified", cat.records.len(), cat.function);
    Ok(())
}
