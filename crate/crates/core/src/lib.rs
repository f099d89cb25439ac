//! Radii of starlikeness for analytic functions with a fixed second
//! coefficient.
//!
//! For the classes `G1` (`Re((1+z)^2 f/z) > 0`) and `G2` (`Re((1+z) f/z) > 0`)
//! this crate computes, for each of twelve target domains, the largest
//! `r < 1` such that `z f'(z)/f(z)` maps `|z| < r` into the domain, and
//! checks those radii against the exact domains and the extremal functions.

pub mod bounds;
pub mod class;
pub mod cli;
pub mod error;
pub mod extremal;
pub mod output;
pub mod poly;
pub mod regions;
pub mod solver;
pub mod target;
pub mod verify;

pub use num_complex::Complex64;

pub use bounds::{class_disk, g1_disk, g2_disk, herglotz_logderiv_bound, DiskSpec, HerglotzParams};
pub use class::{ClassId, ClassSpec};
pub use error::{Error, Result};
pub use regions::{containment_threshold, region_boundary, region_contains, winding_contains};
pub use solver::{
    assemble_condition, compute_radius, radius_table, smallest_root_in_01, RadiusCondition, RadiusResult, Variant,
    VariantPolicy,
};
pub use target::{Family, Target};
