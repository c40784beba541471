//! Numerical laboratory for Mellin–Barnes spectral filters attached to the
//! Riemann zeta function and the Dirichlet beta function.
//!
//! The crate is organised bottom-up:
//!
//! - [`specfun`]: Γ, log Γ with tracked argument, ζ, Hurwitz ζ, β, ξ, Hardy Z
//!   and von Mangoldt tables.
//! - [`bessel`]: K_ν and I_ν of real argument and complex order.
//! - [`mbfilter`]: vertical-contour quadrature of the Mellin–Barnes kernels,
//!   contour shifts, residues, finite parts and Newton iteration in the energy.
//! - [`zerocensus`]: critical-line zero scans, counting functions, the
//!   counting-difference audit and the on-disk zero catalog.
//! - [`operatorlab`]: Prüfer phase integration, Frobenius endpoint
//!   classification and square-integrability probes.
//! - [`spectrostats`]: unfolding, spacing and pair-correlation statistics and
//!   the trace-formula audits.
//! - [`audit`]: the claim registry that evaluates every audited identity and
//!   serialises the ledger.
//!
//! Everything is deterministic: parallel sections collect into fixed-order
//! buffers before any reduction.

#![allow(clippy::excessive_precision, clippy::neg_cmp_op_on_partial_ord)]

pub mod audit;
pub mod bessel;
pub mod complex;
pub mod dd;
pub mod error;
pub mod mbfilter;
pub mod operatorlab;
pub mod quad;
pub mod specfun;
pub mod spectrostats;
pub mod sum;
pub mod zerocensus;


pub use audit::{AuditConfig, AuditReport, Ledger, Verdict};
pub use bessel::{BesselEval, SpectralParameter};
pub use complex::{c64, ComplexPoint, Precision};
pub use error::{Error, Result};
pub use mbfilter::{ContourSpec, FilterEvaluation, Kernel, QuadratureRule, RindlerScale};
pub use operatorlab::{EndpointClass, PhaseForm, RadialProblem};
pub use specfun::{ArgTracker, PrimeTable};
pub use spectrostats::UnfoldedSpectrum;
pub use zerocensus::{BijectionAudit, Catalog, CountingReport, LFunction, ZeroMethod, ZeroRecord};
