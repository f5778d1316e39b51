//! Singularities of pairs: limiting log discrepancies, the log terminal / log canonical
//! ladder with lc centers, the terminal / canonical ladder, and numerical classification
//! of toric surfaces.
//!
//! Both ladders are decided on a linearity fan, where the relevant discrepancy function is
//! linear on every cone. Positivity of a linear function on a cone is read off its rays.
//! The canonical ladder is quantified over non-ray primitive vectors only, so for each cone
//! `τ` it is tested on `HB(τ)` minus the rays of `σ`, on sums `v_i + v_j` of two rays of `σ`
//! in `τ`, and on sums `v_i + b`. Every other non-ray primitive vector of `τ` is a sum of
//! Hilbert basis elements that dominates one of these.

pub mod canonical;
pub mod centers;
pub mod classify;
pub mod discrepancy;
pub mod surface;

pub use canonical::{canonical_inclusion_check, certified_inclusion_m};
pub use centers::{lc_centers, LcCenter};
pub use classify::{classify, classify_can, classify_log, CanLevel, Classification, LogLevel, Witness, WitnessKind};
pub use discrepancy::{limiting_log_discrepancy, log_discrepancy};
pub use surface::{
    surface_minimal_resolution, surface_numerical_classify, toric_discrepancies, IntersectionData, NumericalClass,
};
