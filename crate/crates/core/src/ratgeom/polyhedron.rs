//! H-polyhedra `{u ∈ M_ℚ : ⟨u, n_i⟩ ≥ b_i}` and their lattice points.

use crate::error::{Error, Result};
use crate::ratgeom::cone::{hilbert_basis, RationalCone};
use crate::ratgeom::linalg::{self, subsets};
use crate::ratgeom::rational::{ceil_i64, dot_iq, floor_i64, int, lcm_dens, to_rat_vec, Rat};
use crate::ratgeom::simplex;
use std::collections::BTreeSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPolyhedron {
    dim: usize,
    normals: Vec<Vec<i64>>,
    rhs: Vec<Rat>,
}

impl HPolyhedron {
    pub fn new(dim: usize, constraints: Vec<(Vec<i64>, Rat)>) -> Result<Self> {
        let mut normals = Vec::new();
        let mut rhs = Vec::new();
        for (n, b) in constraints {
            if n.len() != dim {
                return Err(Error::DimensionMismatch(format!("normal {n:?} in rank {dim}")));
            }
            normals.push(n);
            rhs.push(b);
        }
        Ok(HPolyhedron { dim, normals, rhs })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn normals(&self) -> &[Vec<i64>] {
        &self.normals
    }

    pub fn rhs(&self) -> &[Rat] {
        &self.rhs
    }

    pub fn constraints(&self) -> impl Iterator<Item = (&Vec<i64>, &Rat)> {
        self.normals.iter().zip(&self.rhs)
    }

    /// The polyhedron `k·P`.
    pub fn scaled(&self, k: i64) -> HPolyhedron {
        HPolyhedron { dim: self.dim, normals: self.normals.clone(), rhs: self.rhs.iter().map(|b| b * int(k)).collect() }
    }

    pub fn contains(&self, u: &[Rat]) -> bool {
        self.constraints().all(|(n, b)| dot_iq(n, u) >= *b)
    }

    pub fn contains_lattice(&self, u: &[i64]) -> bool {
        self.int_rhs().iter().zip(&self.normals).all(|(b, n)| linalg::dot(n, u) >= *b)
    }

    fn int_rhs(&self) -> Vec<i64> {
        self.rhs.iter().map(ceil_i64).collect()
    }

    /// Extreme rays of the recession cone `{⟨u,n_i⟩ ≥ 0}`; it must be pointed and full-dimensional.
    pub fn recession_rays(&self) -> Result<Vec<Vec<i64>>> {
        let nc = RationalCone::new(self.dim, self.normals.clone())?;
        if !nc.is_full_dim() {
            return Err(Error::NonPointed("recession cone contains a line".into()));
        }
        if !nc.is_pointed() {
            return Err(Error::NonPointed("recession cone is not full-dimensional".into()));
        }
        let mut r = nc.dual()?.rays().to_vec();
        r.sort();
        Ok(r)
    }

    pub fn recession_cone(&self) -> Result<RationalCone> {
        RationalCone::new(self.dim, self.recession_rays()?)
    }

    /// Vertices, sorted. Empty iff the polyhedron is empty (when the normals span).
    pub fn vertices(&self) -> Vec<Vec<Rat>> {
        let d = self.dim;
        let mut out: BTreeSet<Vec<Rat>> = BTreeSet::new();
        for s in subsets(self.normals.len(), d) {
            let a: Vec<Vec<i64>> = s.iter().map(|&i| self.normals[i].clone()).collect();
            if linalg::det(&a) == 0 {
                continue;
            }
            let aq: Vec<Vec<Rat>> = a.iter().map(|r| to_rat_vec(r)).collect();
            let b: Vec<Rat> = s.iter().map(|&i| self.rhs[i].clone()).collect();
            let x = linalg::solve(&aq, &b).expect("nonsingular system");
            if self.contains(&x) {
                out.insert(x);
            }
        }
        out.into_iter().collect()
    }

    /// lcm of the denominators of all vertex coordinates.
    pub fn vertex_denominator_lcm(&self) -> i64 {
        let vs = self.vertices();
        lcm_dens(vs.iter().flatten())
    }

    pub fn lp_min(&self, objective: &[i64]) -> Result<(Rat, Vec<Rat>)> {
        let a: Vec<Vec<Rat>> = self.normals.iter().map(|n| to_rat_vec(n)).collect();
        simplex::minimize(&a, &self.rhs, &to_rat_vec(objective))
    }

    /// Minimal generators of the module `P ∩ M` over `rec(P) ∩ M`, sorted.
    pub fn min_generators(&self) -> Result<Vec<Vec<i64>>> {
        let rec = self.recession_rays()?;
        let verts = self.vertices();
        if verts.is_empty() {
            return Err(Error::Infeasible);
        }
        let hb = hilbert_basis(&RationalCone::new(self.dim, rec.clone())?)?;
        let d = self.dim;
        let mut lo = vec![i64::MAX; d];
        let mut hi = vec![i64::MIN; d];
        for v in &verts {
            for j in 0..d {
                lo[j] = lo[j].min(floor_i64(&v[j]));
                hi[j] = hi[j].max(ceil_i64(&v[j]));
            }
        }
        for j in 0..d {
            lo[j] += rec.iter().map(|h| h[j].min(0)).sum::<i64>();
            hi[j] += rec.iter().map(|h| h[j].max(0)).sum::<i64>();
        }
        let b = self.int_rhs();
        let member = |u: &[i64]| b.iter().zip(&self.normals).all(|(bi, n)| linalg::dot(n, u) >= *bi);
        let mut out = Vec::new();
        if lo.iter().zip(&hi).any(|(l, h)| l > h) {
            return Err(Error::Infeasible);
        }
        let mut u = lo.clone();
        loop {
            if member(&u) && hb.iter().all(|h| !member(&linalg::sub(&u, h))) {
                out.push(u.clone());
            }
            let mut j = 0;
            loop {
                if j == d {
                    out.sort();
                    if out.is_empty() {
                        return Err(Error::Infeasible);
                    }
                    return Ok(out);
                }
                if u[j] < hi[j] {
                    u[j] += 1;
                    break;
                }
                u[j] = lo[j];
                j += 1;
            }
        }
    }

    /// Integer minimum of `⟨u, objective⟩` over `P ∩ M`.
    pub fn ilp_min(&self, objective: &[i64]) -> Result<(Rat, Vec<i64>)> {
        let gens = self.min_generators()?;
        let rec = self.recession_rays()?;
        if rec.iter().any(|h| linalg::dot(h, objective) < 0) {
            return Err(Error::Unbounded);
        }
        let best = gens.iter().min_by_key(|g| (linalg::dot(g, objective), (*g).clone())).expect("nonempty");
        Ok((int(linalg::dot(best, objective)), best.clone()))
    }
}

/// `min_{g} ⟨g, w⟩` over a finite point set.
pub fn support(points: &[Vec<i64>], w: &[i64]) -> i64 {
    points.iter().map(|g| linalg::dot(g, w)).min().expect("nonempty point set")
}

/// `min_{v} ⟨v, w⟩` over rational points.
pub fn support_q(points: &[Vec<Rat>], w: &[i64]) -> Rat {
    points.iter().map(|v| dot_iq(w, v)).min().expect("nonempty point set")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratgeom::rational::frac;

    fn poly(c: &[(&[i64], i64)]) -> HPolyhedron {
        HPolyhedron::new(c[0].0.len(), c.iter().map(|(n, b)| (n.to_vec(), int(*b))).collect()).unwrap()
    }

    #[test]
    fn lp_examples() {
        let p = poly(&[(&[1, 0], 1), (&[1, 2], 0)]);
        let (v, u) = p.lp_min(&[1, 1]).unwrap();
        assert_eq!(v, frac(1, 2));
        assert_eq!(u, vec![int(1), frac(-1, 2)]);
        assert_eq!(poly(&[(&[1, 0], 0)]).lp_min(&[-1, 0]), Err(Error::Unbounded));
    }

    #[test]
    fn ilp_examples() {
        let p = poly(&[(&[1, 0], 1), (&[1, 2], 0)]);
        assert_eq!(p.ilp_min(&[1, 1]).unwrap(), (int(1), vec![1, 0]));
        let p = poly(&[(&[1, 0], -1), (&[1, 2], 0)]);
        let (v, u) = p.ilp_min(&[1, 1]).unwrap();
        assert_eq!(v, int(0));
        assert!(p.contains_lattice(&u) && linalg::dot(&u, &[1, 1]) == 0);
        let p = poly(&[(&[1, 0], 2), (&[1, 2], 0)]);
        assert_eq!(p.ilp_min(&[1, 1]).unwrap().0, int(1));
        assert_eq!(p.ilp_min(&[-1, 0]), Err(Error::Unbounded));
    }

    #[test]
    fn generators() {
        assert_eq!(poly(&[(&[1, 0], 0), (&[0, 1], 0)]).min_generators().unwrap(), vec![vec![0, 0]]);
        // O(−L) on the quadric cone is not principal
        assert_eq!(poly(&[(&[1, 0], 1), (&[1, 2], 0)]).min_generators().unwrap(), vec![vec![1, 0], vec![2, -1]]);
        let g = poly(&[(&[1, 0], -1), (&[1, 2], -1)]).min_generators().unwrap();
        assert_eq!(g, vec![vec![-1, 0]]);
    }

    #[test]
    fn vertices_and_denominators() {
        let p = poly(&[(&[1, 0], -1), (&[1, 2], -1)]);
        assert_eq!(p.vertices(), vec![vec![int(-1), int(0)]]);
        let p = poly(&[(&[1, 0], 1), (&[1, 2], 0)]);
        assert_eq!(p.vertex_denominator_lcm(), 2);
        assert!(poly(&[(&[1], 1), (&[-1], 0)]).vertices().is_empty());
    }
}
