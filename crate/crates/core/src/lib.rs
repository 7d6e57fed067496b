//! Exact Poincaré series for tensor multiplicities.
//!
//! For a finite group with a chosen module V, the multiplicity of each
//! irreducible in V^⊗k is the number of k-step walks from the trivial node
//! on the representation graph. For the finite subgroups of SU(2) that graph
//! is an affine Dynkin diagram, and the generating functions of those walk
//! counts are rational functions computable exactly from small polynomial
//! determinants.
//!
//! The crate computes those series in exact arbitrary-precision arithmetic
//! and cross-checks every result along independent routes: brute-force walk
//! counting, Chebyshev closed forms, spectral exponent products, and Molien
//! sums.
//!
//! ```
//! use mckay::poincare::invariants_series;
//! use mckay::repgraph::mckay_graph;
//! use mckay::{descriptor, GroupKind};
//!
//! // invariants of tensor powers of the defining module of the binary
//! // icosahedral group: 1 + t^2 + 2t^4 + 5t^6 + 14t^8 + 42t^10 + 133t^12
//! let graph = mckay_graph(&descriptor(GroupKind::BinaryIcosahedral)?)?;
//! let inv = invariants_series(&graph)?;
//! assert_eq!(inv.series.series(13)[12].to_string(), "133");
//! # Ok::<(), mckay::Error>(())
//! ```
//!
//! Module map:
//! - [`polyring`] — integer/rational polynomials, determinants, rational
//!   functions, series expansion
//! - [`groups`] — the catalog of groups with marks, exponents, and class data
//! - [`repgraph`] — representation graphs, walk counting, Bratteli levels,
//!   character-table and JSON ingestion
//! - [`poincare`] — the series engine (Cramer and linear-solve routes)
//! - [`chebyshev`] — the polynomial families behind the closed forms
//! - [`closedform`] — per-family closed forms and their consistency reports
//! - [`cli`] — the command surface used by the `mckay` binary

// index-based loops mirror the matrix notation throughout
#![allow(clippy::needless_range_loop)]

pub mod chebyshev;
pub mod cli;
pub mod closedform;
pub mod error;
pub mod groups;
pub mod poincare;
pub mod polyring;
pub mod repgraph;
pub mod spectral;

pub use error::{Error, Result};
pub use groups::{descriptor, GroupDescriptor, GroupKind};
pub use polyring::{IntPoly, PolyMatrix, RatPoly, RationalFn};
pub use repgraph::RepGraph;

#[cfg(test)]
mod tests {
    // every value type is immutable after construction and safe to share
    #[test]
    fn core_types_are_send_and_sync() {
        fn check<T: Send + Sync>() {}
        check::<crate::IntPoly>();
        check::<crate::RatPoly>();
        check::<crate::RationalFn>();
        check::<crate::PolyMatrix>();
        check::<crate::GroupDescriptor>();
        check::<crate::RepGraph>();
        check::<crate::repgraph::BratteliLevel>();
        check::<crate::poincare::SeriesResult>();
        check::<crate::closedform::ClosedFormSeries>();
    }
}
