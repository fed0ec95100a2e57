//! Construction and exhaustive verification of q-ary completely regular
//! codes.
//!
//! The crate builds parity check matrices for two families of linear codes
//! obtained by concatenating copies of a cyclic Hamming parity matrix with
//! column-rotated versions of itself, plus a handful of short sporadic
//! codes assembled from a 2x3 kernel block and a difference matrix. For any
//! linear code it can then decide complete regularity by exhaustive coset
//! analysis, compute covering radius, intersection array, dual weight
//! spectrum, uniformly-packed parameters and design properties, and check
//! each quantity against its closed-form prediction.
//!
//! Everything is exact (table-driven GF(q) arithmetic, big-integer weight
//! counts) and deterministic: fixed field moduli, fixed column orders, and
//! a first-witness rule for reporting failures.

pub mod analysis;
pub mod budget;
pub mod code;
pub mod constructions;
pub mod cosets;
pub mod error;
pub mod field;
pub mod matrix;
pub mod suite;

mod util;

pub use budget::Budget;
pub use code::{CodeDocument, LinearCode, WeightDistribution};
pub use cosets::{CosetAnalysis, CrReport, IntersectionArray};
pub use error::{Error, Result};
pub use field::Field;
pub use matrix::Matrix;
