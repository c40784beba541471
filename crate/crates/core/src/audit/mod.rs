//! Audit reports and the claim registry.

mod registry;
mod report;

pub use registry::{omega_grid, run_audit, run_claim, AuditConfig, Ledger, CLAIMS};
pub use report::{AuditReport, Verdict};
