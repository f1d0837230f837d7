//! Exact graph invariants and Castelnuovo–Mumford regularity of powers of
//! edge ideals.
//!
//! Everything is exact and deterministic: matching-type invariants and
//! co-chordal cover numbers come from exhaustive budget-guarded searches,
//! regularity comes from Hochster's formula on the polarized power of the
//! edge ideal, and the bounds harness ties the two sides together into
//! machine-checkable reports.

pub mod betti;
pub mod bitset;
pub mod bounds;
pub mod budget;
pub mod cochordal;
pub mod complex;
pub mod error;
pub mod formats;
pub mod graph;
pub mod homology;
pub mod ideal;
pub mod matchings;
pub mod scan;
pub mod structure;

pub use budget::Budget;
pub use error::{Error, Result};
pub use graph::{Girth, Graph};
