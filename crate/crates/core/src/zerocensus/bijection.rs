//! Counting-difference audit between filter roots and catalogued zeros.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::catalog::Catalog;
use crate::audit::Verdict;
use crate::bessel::SpectralParameter;
use crate::error::{Error, Result};
use crate::mbfilter::{line_integral, newton_complex, ContourSpec, Kernel, RindlerScale, REAL_ROOT_TOLERANCE};

/// Distance on either side of each jump at which the counts are compared.
const STRADDLE: f64 = 0.05;
const GRID_STEP: f64 = 0.5;
const SEED_STEP: f64 = 0.25;

/// Real roots of the filter found from a set of Newton seeds.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootSearch {
    pub roots: Vec<f64>,
    pub seeds: Vec<f64>,
    /// One line per seed describing where Newton ended.
    pub outcomes: Vec<String>,
}

/// Seeds Newton at every local minimum of |ψ(E)|/∫|integrand| on a 0.25 grid
/// in [1, e_max] and at `extra_seeds`, keeping converged real roots ≤ e_max.
pub fn filter_root_search(
    kernel: Kernel,
    scale: RindlerScale,
    contour: &ContourSpec,
    e_max: f64,
    extra_seeds: &[f64],
) -> Result<RootSearch> {
    let n = ((e_max - 1.0) / SEED_STEP).floor().max(0.0) as usize;
    let grid: Vec<f64> = (0..=n).map(|k| 1.0 + SEED_STEP * k as f64).collect();
    let rel: Vec<f64> = grid
        .par_iter()
        .map(|&e| {
            let r = line_integral(kernel, SpectralParameter::from_energy(e).order, scale, contour, false)?;
            Ok(r.value.norm() / r.l1)
        })
        .collect::<Result<_>>()?;
    let mut seeds: Vec<f64> = (1..rel.len().saturating_sub(1))
        .filter(|&k| rel[k] < rel[k - 1] && rel[k] < rel[k + 1])
        .map(|k| grid[k])
        .collect();
    seeds.extend(extra_seeds.iter().copied().filter(|e| *e <= e_max));
    seeds.sort_by(f64::total_cmp);
    seeds.dedup();
    let results: Vec<(Option<f64>, String)> = seeds
        .par_iter()
        .map(|&seed| match newton_complex(kernel, scale, contour, seed) {
            Ok(r) if r.energy.im.abs() <= REAL_ROOT_TOLERANCE && r.energy.re <= e_max => {
                (Some(r.energy.re), format!("seed {seed:.4}: real root {:.12}", r.energy.re))
            }
            Ok(r) => (None, format!("seed {seed:.4}: converged off the real axis at {:.6}", r.energy)),
            Err(e) => (None, format!("seed {seed:.4}: {e}")),
        })
        .collect();
    let mut roots: Vec<f64> = results.iter().filter_map(|r| r.0).collect();
    roots.sort_by(f64::total_cmp);
    roots.dedup_by(|a, b| (*a - *b).abs() < 1e-6);
    Ok(RootSearch { roots, seeds, outcomes: results.into_iter().map(|r| r.1).collect() })
}

/// Δ(E) = N_H(E) − N_ζ(E/2) on a grid straddling every jump of either count.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BijectionAudit {
    pub e_grid: Vec<f64>,
    pub n_h_values: Vec<i64>,
    pub n_zeta_values: Vec<i64>,
    pub delta_values: Vec<i64>,
    pub verdict: Verdict,
    /// First grid energy where Δ ≠ 0.
    pub first_failure: Option<f64>,
}

/// Compares the filter-root count with the catalog count up to `e_max`.
pub fn bijection_audit(e_max: f64, catalog: &Catalog, filter_roots: &[f64]) -> Result<BijectionAudit> {
    if catalog.coverage() < e_max / 2.0 {
        return Err(Error::IncompleteCatalog { covered: catalog.coverage(), required: e_max / 2.0 });
    }
    let mut grid: Vec<f64> = (0..=(e_max / GRID_STEP).floor() as usize).map(|k| k as f64 * GRID_STEP).collect();
    let jumps = catalog.ordinates().into_iter().map(|t| 2.0 * t).chain(filter_roots.iter().copied());
    for j in jumps.filter(|j| *j <= e_max) {
        grid.extend([j - STRADDLE, j + STRADDLE].into_iter().filter(|e| *e >= 0.0 && *e <= e_max));
    }
    grid.sort_by(f64::total_cmp);
    grid.dedup();
    let n_h: Vec<i64> = grid.iter().map(|&e| filter_roots.iter().filter(|r| **r <= e).count() as i64).collect();
    let n_z: Vec<i64> = grid.iter().map(|&e| catalog.count_up_to(e / 2.0) as i64).collect();
    let delta: Vec<i64> = n_h.iter().zip(&n_z).map(|(a, b)| a - b).collect();
    let first_failure = grid.iter().zip(&delta).find(|(_, d)| **d != 0).map(|(e, _)| *e);
    Ok(BijectionAudit {
        e_grid: grid,
        n_h_values: n_h,
        n_zeta_values: n_z,
        delta_values: delta,
        verdict: if first_failure.is_none() { Verdict::Pass } else { Verdict::Fail },
        first_failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zerocensus::{scan_zeros, LFunction};

    fn catalog(t: f64) -> Catalog {
        Catalog::scanned(LFunction::Zeta, scan_zeros(LFunction::Zeta, t).unwrap(), t)
    }

    #[test]
    fn matching_spectra_pass_and_fault_is_located() {
        let c = catalog(30.0);
        let roots: Vec<f64> = c.ordinates().iter().map(|t| 2.0 * t).collect();
        let a = bijection_audit(60.0, &c, &roots).unwrap();
        assert_eq!(a.verdict, Verdict::Pass);
        assert!(a.delta_values.iter().all(|d| *d == 0));
        let mut fewer = c.clone();
        fewer.records.remove(1);
        let a = bijection_audit(60.0, &fewer, &roots).unwrap();
        assert_eq!(a.verdict, Verdict::Fail);
        let f = a.first_failure.unwrap();
        assert!((f - 2.0 * c.records[1].ordinate).abs() <= STRADDLE + 1e-12);
    }

    #[test]
    fn empty_below_first_zero() {
        let c = catalog(10.0);
        let a = bijection_audit(20.0, &c, &[]).unwrap();
        assert_eq!(a.verdict, Verdict::Pass);
        assert!(a.n_h_values.iter().chain(&a.n_zeta_values).all(|v| *v == 0));
    }

    #[test]
    fn incomplete_catalog() {
        let c = catalog(10.0);
        assert!(matches!(bijection_audit(60.0, &c, &[]), Err(Error::IncompleteCatalog { .. })));
    }
}
