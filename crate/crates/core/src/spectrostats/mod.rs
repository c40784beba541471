//! Statistics of unfolded zero ordinates and trace-formula audits.

mod stats;
mod traces;
mod unfold;

pub use stats::{
    ks_wigner_dyson, levels_from_spacings, pair_correlation, PairTable, pair_density, sample_poisson, sample_wigner_dyson,
    sine_kernel_r2, spacing_vs_gue, wigner_dyson_cdf, wigner_dyson_pdf, FULL_SAMPLE, KS_FAIL, KS_PASS, PAIR_TOLERANCE,
    PAIR_WINDOW,
};
pub use traces::{
    density_peaks, fredholm_audit, oscillatory_density, smooth_density, trace_class_audit, trace_i_of_a,
    weil_prime_side, OscillationSign, DENSITY_PRIME_CEILING, DENSITY_SIGMA, EVEN_PART_INCREMENT,
};
pub use unfold::{unfold, UnfoldedSpectrum, MIN_WINDOW};
