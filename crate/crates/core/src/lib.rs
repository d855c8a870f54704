//! Lozenge tilings of triangular-lattice regions with holes along three
//! dendrites, and exact checks of how their counts change under flipping.

pub mod counting;
pub mod error;
pub mod lattice;
pub mod lgv;
pub mod linalg;
pub mod par;
pub mod regions;
pub mod sample;
pub mod theorem;

pub use error::{Error, Result};
