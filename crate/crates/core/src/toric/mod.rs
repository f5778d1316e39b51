//! Affine toric varieties, fan refinements of their cones and toric resolutions.

pub mod fan;
pub mod resolve;
pub mod valuation;
pub mod variety;

pub use fan::{common_refinement, normal_fan_of_points, normal_fan_restricted, Fan};
pub use resolve::{log_resolution, log_resolution_with, resolve, resolve_with, PivotOrder};
pub use valuation::{center, DivisorialValuation};
pub use variety::AffineToricVariety;
