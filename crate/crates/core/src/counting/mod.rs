//! Tiling counts: exhaustive enumeration, Kasteleyn determinants and
//! symmetry-restricted counts.

mod enumerate;
mod graph;
mod kasteleyn;
mod symmetric;

use std::collections::BTreeSet;

use num_bigint::BigUint;

use crate::lattice::Lozenge;

pub use enumerate::{count_enumeration, count_enumeration_with, enumerate_tilings, for_each_tiling};
pub use kasteleyn::count_determinant;
pub use symmetric::{count_symmetric, SymmetryClass, SymmetryTag};

pub type Count = BigUint;

/// A set of lozenges covering a region exactly once.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tiling {
    pub lozenges: BTreeSet<Lozenge>,
}
