//! Critical-line zeros of ζ and β: scans, counting functions and the catalog.

mod bijection;
mod catalog;
mod counting;
mod scan;
mod types;

pub use bijection::{bijection_audit, filter_root_search, BijectionAudit, RootSearch};
pub use catalog::{Catalog, CATALOG_VERSION};
pub use counting::{
    n_h_guinand_weil, predicted_count, riemann_von_mangoldt, rvm_main_term, s_bound, s_grid,
    s_of_t, s_of_t_bound_check, CountingReport, REMAINDER_CONSTANT,
};
pub use scan::{rotated, scan_with_step, scan_zeros, SCAN_CEILING, SCAN_STEP};
pub use types::{LFunction, ZeroMethod, ZeroRecord};
