//! Exact toric computations of multiplier ideals, thresholds and singularity classes.
//!
//! Everything lives on an affine normal toric variety `X = U_σ`: torus-invariant
//! divisors are coefficient vectors over the rays of `σ`, ideals are monomial
//! modules over `σ^∨ ∩ M`, and every valuation is a primitive lattice point of `σ`.
//! All arithmetic is exact.

pub mod cli;
pub mod divisors;
pub mod error;
pub mod mult;
pub mod ratgeom;
pub mod sing;
pub mod toric;

pub use error::{Error, Result};
pub use ratgeom::rational::Rat;
