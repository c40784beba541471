//! Mellin–Barnes filter kernels on vertical contours.

mod contour;
mod hadamard;
mod kernel;
mod newton;
mod residue;

pub use contour::{
    circle_residue, contour_shift, contour_shift_delta, line_integral, mb_integral,
    mb_integral_scale_derivative, residue_corrected_shift, ContourSpec, FilterEvaluation,
    LineIntegral, QuadratureRule, ResidueShift, RindlerScale, POLE_MARGIN, TAIL_TOLERANCE,
};
pub use hadamard::hadamard_finite_part;
pub use kernel::{energy_derivative_factor, integrand, scale_derivative_factor, Kernel};
pub use newton::{newton_complex, newton_filter_root, FilterRoot, BASIN_RADIUS, MAX_ITERATIONS, REAL_ROOT_TOLERANCE};
pub use residue::{
    double_pole_circle, double_pole_circle_with, residue_simple_zero, DoublePoleData, EPS_LADDER,
};
