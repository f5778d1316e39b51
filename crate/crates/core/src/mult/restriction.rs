//! Restriction to the orbit closure `D_i = V(ρ_i)` of a base ray.
//!
//! `D_i` is the affine toric variety of the image of `σ` in `N/ℤv_i`; its character
//! lattice is `v_i^⊥ ∩ M`, written in a fixed basis `b_1..b_{d−1}`.

use crate::divisors::MonomialIdeal;
use crate::error::{Error, Result};
use crate::ratgeom::linalg::{self, dot, integer_kernel};
use crate::ratgeom::rational::{dot_iq, int, Rat};
use crate::ratgeom::{HPolyhedron, RationalCone};
use crate::toric::AffineToricVariety;
use num_traits::Signed;

#[derive(Clone, Debug)]
pub struct RayRestriction {
    pub ray: usize,
    pub basis: Vec<Vec<i64>>,
    pub variety: AffineToricVariety,
}

pub fn restrict_to_ray(x: &AffineToricVariety, i: usize) -> Result<RayRestriction> {
    if x.dim() < 2 {
        return Err(Error::WrongDimension { expected: 2, got: x.dim() });
    }
    let v = &x.rays()[i];
    let basis = integer_kernel(std::slice::from_ref(v), x.dim());
    let imgs: Vec<Vec<i64>> = x
        .rays()
        .iter()
        .enumerate()
        .filter(|(j, _)| *j != i)
        .map(|(_, r)| basis.iter().map(|b| dot(b, r)).collect())
        .collect();
    let cone = RationalCone::new(x.dim() - 1, imgs)?;
    let variety = AffineToricVariety::new(cone.rays().to_vec())?;
    Ok(RayRestriction { ray: i, basis, variety })
}

impl RayRestriction {
    pub fn project(&self, w: &[i64]) -> Vec<i64> {
        self.basis.iter().map(|b| dot(b, w)).collect()
    }

    pub fn lift(&self, c: &[i64]) -> Vec<i64> {
        let d = self.basis[0].len();
        (0..d).map(|j| self.basis.iter().zip(c).map(|(b, ck)| b[j] * ck).sum()).collect()
    }

    /// Coordinates of `u ∈ v_i^⊥` in the basis.
    pub fn coords_q(&self, u: &[Rat]) -> Option<Vec<Rat>> {
        let k = self.basis.len();
        let a: Vec<Vec<Rat>> = (0..u.len()).map(|i| (0..k).map(|j| int(self.basis[j][i])).collect()).collect();
        linalg::solve(&a, u)
    }

    /// `{u ∈ M : ⟨u,w⟩ ≥ b_w}` cut by `v_i^⊥`, as a module on `D_i`; `None` when empty.
    pub fn slice(&self, normals: &[Vec<i64>], rhs: &[i64]) -> Result<Option<MonomialIdeal>> {
        let mut cons = Vec::new();
        for (n, b) in normals.iter().zip(rhs) {
            let p = self.project(n);
            if linalg::is_zero(&p) {
                if *b > 0 {
                    return Ok(None);
                }
                continue;
            }
            cons.push((p, int(*b)));
        }
        let poly = HPolyhedron::new(self.basis.len(), cons)?;
        match poly.min_generators() {
            Ok(g) => Ok(Some(MonomialIdeal::new(&self.variety, g)?)),
            Err(Error::Infeasible) => Ok(None),
            Err(e) => Err(e),
        }
    }

    /// `I·O_{D_i}`: the monomials of `I` lying on `v_i^⊥`.
    pub fn restrict_ideal(&self, x: &AffineToricVariety, ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
        let v = &x.rays()[self.ray];
        let mut gens = Vec::new();
        for g in ideal.gens() {
            if dot(g, v) != 0 {
                continue;
            }
            let q: Vec<Rat> = g.iter().map(|&t| int(t)).collect();
            let c = self.coords_q(&q).ok_or_else(|| Error::Invalid("generator off v^⊥".into()))?;
            gens.push(c.iter().map(crate::ratgeom::rational::floor_i64).collect());
        }
        if gens.is_empty() {
            return Err(Error::SharedComponent);
        }
        MonomialIdeal::new(&self.variety, gens)
    }

    /// The boundary `δ(ρ) = 1 + ⟨s, ρ⟩` on `D_i` for a slope `s ∈ v_i^⊥` of `K_X + D_i + Δ`.
    pub fn different(&self, slope: &[Rat]) -> Result<Vec<Rat>> {
        let c = self.coords_q(slope).ok_or_else(|| Error::Invalid("slope not orthogonal to the ray".into()))?;
        let out: Vec<Rat> = self.variety.rays().iter().map(|rho| int(1) + dot_iq(rho, &c)).collect();
        if out.iter().any(|d| d.is_negative()) {
            return Err(Error::BadBoundary("restricted boundary is not effective".into()));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plane_and_nqg() {
        let x = AffineToricVariety::new(vec![vec![1, 0], vec![0, 1]]).unwrap();
        let r = restrict_to_ray(&x, 0).unwrap();
        assert_eq!(r.variety.rays(), &[vec![1]]);
        let y2 = MonomialIdeal::new(&x, vec![vec![0, 2]]).unwrap();
        assert_eq!(r.restrict_ideal(&x, &y2).unwrap().gens(), &[vec![2]]);
        let n = AffineToricVariety::new(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 2, -1]]).unwrap();
        let r = restrict_to_ray(&n, 3).unwrap();
        assert_eq!(r.variety.dim(), 2);
        assert_eq!(r.variety.n_rays(), 2);
    }
}
