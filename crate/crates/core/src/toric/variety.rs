use crate::error::{Error, Result};
use crate::ratgeom::linalg::{dot, primitive};
use crate::ratgeom::RationalCone;

/// `X = U_σ` for a pointed full-dimensional cone `σ ⊂ N_ℝ`, with a fixed ray order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineToricVariety {
    cone: RationalCone,
    dual: Vec<Vec<i64>>,
}

impl AffineToricVariety {
    pub fn new(rays: Vec<Vec<i64>>) -> Result<Self> {
        let dim = rays.first().map(|r| r.len()).ok_or_else(|| Error::Invalid("no rays".into()))?;
        let prim: Vec<Vec<i64>> = rays.iter().map(|r| primitive(r)).collect::<Result<_>>()?;
        let cone = RationalCone::new(dim, prim.clone())?;
        if !cone.is_full_dim() {
            return Err(Error::Invalid("cone is not full-dimensional".into()));
        }
        if !cone.is_pointed() {
            return Err(Error::NonPointed(format!("{prim:?}")));
        }
        if cone.rays() != prim.as_slice() {
            return Err(Error::Invalid("rays must be distinct extreme rays of the cone".into()));
        }
        let mut dual = cone.dual()?.rays().to_vec();
        dual.sort();
        Ok(AffineToricVariety { cone, dual })
    }

    pub fn dim(&self) -> usize {
        self.cone.dim()
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        self.cone.rays()
    }

    pub fn n_rays(&self) -> usize {
        self.cone.rays().len()
    }

    pub fn cone(&self) -> &RationalCone {
        &self.cone
    }

    /// Generators of `σ^∨`, sorted.
    pub fn dual_generators(&self) -> &[Vec<i64>] {
        &self.dual
    }

    /// `w ∈ σ`.
    pub fn contains(&self, w: &[i64]) -> bool {
        w.len() == self.dim() && self.dual.iter().all(|u| dot(u, w) >= 0)
    }

    /// `u ∈ σ^∨`.
    pub fn in_dual(&self, u: &[i64]) -> bool {
        self.rays().iter().all(|v| dot(u, v) >= 0)
    }

    pub fn is_smooth(&self) -> bool {
        self.cone.is_simplicial() && self.cone.multiplicity() == Ok(1)
    }
}
