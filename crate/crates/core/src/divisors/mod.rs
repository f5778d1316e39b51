//! Torus-invariant divisors, monomial modules, valuations, pullbacks and relative canonical divisors.

pub mod divisor;
pub mod ideal;
pub mod pullback;
pub mod relcan;

pub use divisor::{canonical_divisor, section_polyhedron, TWeilDivisor};
pub use ideal::MonomialIdeal;
pub use pullback::{divisorial_part, limit_val, nat_pullback, nat_val, pullback, reflexive_hull, val_ideal};
pub use relcan::{is_qcartier, limiting_relcan, log_relcan, relcan, relcan_minus, QCartier};
