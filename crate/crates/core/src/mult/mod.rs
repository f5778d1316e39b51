//! Multiplier ideals `J_m(X,Z)` and `J(X,Z)`, thresholds, jumping numbers, asymptotic and
//! adjoint ideals, and the search for compatible toric boundaries.

pub mod adjoint;
pub mod asymptotic;
pub mod boundary;
pub mod multiplier;
pub mod pair;
pub mod restriction;
pub mod thresholds;

pub use adjoint::{adjoint_ideal, adjoint_ideal_m, exact_sequence_check, ExactSequenceReport};
pub use asymptotic::{asymptotic_mult_ideal, base_ideal, AsymptoticResult};
pub use boundary::{compatible_boundary_search, enumerate_boundaries, CancelToken};
pub use multiplier::{
    log_mult_ideal, mult_ideal, mult_ideal_m, mult_ideal_m_on, mult_ideal_m_with, pushforward_module,
    stabilization_certificate, working_resolution, StabilizationCertificate,
};
pub use pair::{BoundarySpec, PairSpec, Term, TermBody};
pub use thresholds::{jumping_numbers, jumping_numbers_with, lct, Threshold};
