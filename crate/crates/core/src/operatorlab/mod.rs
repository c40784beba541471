//! Operator-theory checks: Prüfer phase, endpoint classification, L² probes.

mod checks;
mod deficiency;
mod frobenius;
mod prufer;

pub use checks::{frobenius_grid, frobenius_grid_check, prufer_energy_pairs, prufer_monotonicity_check};
pub use deficiency::{deficiency_divergence_check, ln_bessel_j0, log_weighted_norms};
pub use frobenius::{eigenfunction_l2_classifier, frobenius_classify, EndpointClass, FrobeniusReport};
pub use prufer::{
    prufer_integrate, prufer_integrate_potential, PhaseForm, PruferState, PruferTrajectory, RadialProblem, MIN_X,
};
