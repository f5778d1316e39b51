use crate::error::{Error, Result};
use crate::ratgeom::linalg::primitive;
use crate::ratgeom::RationalCone;
use crate::toric::{AffineToricVariety, Fan};

/// `v = q · val_F` for the toric divisor `F` over `X` given by a primitive `w ∈ σ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorialValuation {
    pub w: Vec<i64>,
    pub q: i64,
}

impl DivisorialValuation {
    pub fn new(x: &AffineToricVariety, w: Vec<i64>, q: i64) -> Result<Self> {
        if q < 1 {
            return Err(Error::Invalid(format!("valuation multiplier {q} must be positive")));
        }
        if primitive(&w)? != w {
            return Err(Error::Invalid(format!("{w:?} is not primitive")));
        }
        if !x.contains(&w) {
            return Err(Error::OutsideSupport(w));
        }
        Ok(DivisorialValuation { w, q })
    }

    pub fn of(x: &AffineToricVariety, w: Vec<i64>) -> Result<Self> {
        Self::new(x, w, 1)
    }
}

/// The cone whose relative interior contains `v.w`; its orbit closure is the center of `v`.
pub fn center(v: &DivisorialValuation, fan: &Fan) -> Result<RationalCone> {
    fan.smallest_cone_containing(&v.w)
}
