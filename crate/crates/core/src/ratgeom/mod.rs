//! Exact rational linear algebra, cones, polyhedra, LP and ILP.

pub mod cone;
pub mod linalg;
pub mod polyhedron;
pub mod rational;
pub mod simplex;

pub use cone::{hilbert_basis, RationalCone};
pub use linalg::primitive;
pub use polyhedron::HPolyhedron;
pub use rational::Rat;
