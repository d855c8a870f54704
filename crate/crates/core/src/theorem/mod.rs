//! The flip ratio identities: closed forms, the L-region counting routes,
//! the distance-product form and end-to-end verification.

mod fixtures;
mod formulas;
mod geometry;
mod report;
mod routes;

pub use formulas::{
    macmahon, multiset, ratio_rhs_cyclic, ratio_rhs_cyclic_vertical, ratio_rhs_snowflake, ratio_rhs_vertical, Ratio,
};
pub use geometry::{distance, projection, ratio_rhs_geometric};
pub use report::{verify, verify_shifted, Route, RouteCounts, Routes, SymmetryCheck, Verdict, VerificationReport};
pub use routes::{count_h_via_decomposition, count_h_via_decomposition_with, cyclic_count_via_l};
pub use fixtures::{bowtie_squeeze, demo_fixtures, shamrock, triangle_flip, DemoFixture, Trimmed};
