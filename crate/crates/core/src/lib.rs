//! Exact computation of q,t-Catalan and nested q,t-Catalan series.
//!
//! Two independent routes are provided: Dyck path statistics ([`dyck`]) and
//! torus localization sums over fixed points of the Hilbert scheme and the
//! nested Hilbert scheme of points in the plane ([`localization`]). Both
//! produce [`LaurentPoly`] values with arbitrary-precision coefficients.

pub mod dyck;
pub mod localization;
pub mod oracle;
pub mod partitions;
pub mod pieri;
pub mod qtalgebra;

pub use qtalgebra::{LaurentPoly, Monomial, QTFraction};

/// Version string stamped into serialized results.
pub const ENGINE_VERSION: &str = concat!("qtcat-", env!("CARGO_PKG_VERSION"));
