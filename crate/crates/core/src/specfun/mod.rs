//! Complex special functions: Γ, log Γ, digamma, ζ, Hurwitz ζ, Dirichlet β,
//! completed ξ, Hardy Z, argument tracking and the von Mangoldt table.

mod arg;
pub mod ddfun;
mod gamma;
mod primes;
mod zeta;

pub use arg::{log_gamma_continuous, ArgTracker};
pub use gamma::{digamma, gamma, ln_gamma, pole_distance};
pub use primes::{von_mangoldt_table, PrimeTable, PRIME_TABLE_CEILING};
pub use zeta::{
    beta_theta, beta_z, beta_z_complex, completed_xi, dirichlet_beta, em_cutoff, hardy_z,
    hardy_z_complex, hurwitz_zeta, riemann_siegel_theta, zeta, zeta_prime, EM_ORDER,
};

pub(crate) use gamma::{digamma_unchecked, gamma_unchecked, ln_gamma_unchecked};
pub(crate) use zeta::{dirichlet_beta_unchecked, zeta_unchecked};

/// Bernoulli numbers B_2, B_4, …, B_40 as exact fractions.
pub(crate) const BERNOULLI: [(i128, i128); 20] = [
    (1, 6),
    (-1, 30),
    (1, 42),
    (-1, 30),
    (5, 66),
    (-691, 2730),
    (7, 6),
    (-3617, 510),
    (43867, 798),
    (-174611, 330),
    (854513, 138),
    (-236364091, 2730),
    (8553103, 6),
    (-23749461029, 870),
    (8615841276005, 14322),
    (-7709321041217, 510),
    (2577687858367, 6),
    (-26315271553053477373, 1919190),
    (2929993913841559, 6),
    (-261082718496449122051, 13530),
];

/// B_{2k} as a double, k ≥ 1.
#[inline]
pub(crate) fn bernoulli_f64(k: usize) -> f64 {
    let (n, d) = BERNOULLI[k - 1];
    n as f64 / d as f64
}
