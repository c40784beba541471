//! Sieve-built von Mangoldt table.

use crate::error::{Error, Result};

/// Largest table the sieve will build (about 80 MB of f64 plus factors).
pub const PRIME_TABLE_CEILING: u64 = 10_000_000;

/// Λ(n) for 1 ≤ n ≤ limit. Immutable once built, so it can be shared freely.
#[derive(Clone, Debug)]
pub struct PrimeTable {
    pub limit: u64,
    mangoldt: Vec<f64>,
}

impl PrimeTable {
    /// Λ(n), or `None` outside 1..=limit.
    pub fn mangoldt(&self, n: u64) -> Option<f64> {
        if n == 0 || n > self.limit {
            None
        } else {
            Some(self.mangoldt[n as usize])
        }
    }

    /// Non-zero entries (n, Λ(n)) in increasing n.
    pub fn prime_powers(&self) -> impl Iterator<Item = (u64, f64)> + '_ {
        self.mangoldt
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0.0)
            .map(|(n, &v)| (n as u64, v))
    }

    /// Chebyshev ψ(limit) = Σ_{n ≤ limit} Λ(n).
    pub fn chebyshev_psi(&self) -> f64 {
        crate::sum::neumaier_sum(self.mangoldt.iter().copied())
    }
}

pub fn von_mangoldt_table(limit: u64) -> Result<PrimeTable> {
    if limit < 2 {
        return Err(Error::InvalidParameter(format!("prime table limit {limit} < 2")));
    }
    if limit > PRIME_TABLE_CEILING {
        return Err(Error::LimitTooLarge { requested: limit, ceiling: PRIME_TABLE_CEILING });
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut mangoldt = vec![0.0; n + 1];
    for p in 2..=n {
        if composite[p] {
            continue;
        }
        let mut m = p * p;
        while m <= n {
            composite[m] = true;
            m += p;
        }
        let lp = (p as f64).ln();
        let mut q = p;
        loop {
            mangoldt[q] = lp;
            match q.checked_mul(p) {
                Some(next) if next <= n => q = next,
                _ => break,
            }
        }
    }
    Ok(PrimeTable { limit, mangoldt })
}
