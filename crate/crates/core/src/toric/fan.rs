use crate::error::{Error, Result};
use crate::ratgeom::cone::{facets_of, Facet};
use crate::ratgeom::linalg::{self, dot, primitive};
use crate::ratgeom::rational::{clear_denominators, Rat};
use crate::ratgeom::RationalCone;
use crate::toric::AffineToricVariety;
use std::collections::BTreeSet;

/// A subdivision of `σ` into full-dimensional cones, stored as ray-index lists.
///
/// The first `base.n_rays()` rays are the rays of `σ` in their fixed order;
/// the remaining ones are exceptional.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    base: AffineToricVariety,
    rays: Vec<Vec<i64>>,
    cones: Vec<Vec<usize>>,
}

impl Fan {
    pub fn trivial(x: &AffineToricVariety) -> Fan {
        Fan { base: x.clone(), rays: x.rays().to_vec(), cones: vec![(0..x.n_rays()).collect()] }
    }

    /// Builds a fan from explicit data; base rays must come first.
    pub fn from_parts(x: &AffineToricVariety, rays: Vec<Vec<i64>>, cones: Vec<Vec<usize>>) -> Result<Fan> {
        if rays.len() < x.n_rays() || rays[..x.n_rays()] != *x.rays() {
            return Err(Error::BaseMismatch);
        }
        for c in &cones {
            if c.iter().any(|&i| i >= rays.len()) {
                return Err(Error::Invalid("cone refers to an unknown ray".into()));
            }
        }
        Ok(Fan { base: x.clone(), rays, cones }.normalized())
    }

    pub fn base(&self) -> &AffineToricVariety {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn cones(&self) -> &[Vec<usize>] {
        &self.cones
    }

    pub fn is_base_ray(&self, i: usize) -> bool {
        i < self.base.n_rays()
    }

    pub fn exceptional_rays(&self) -> &[Vec<i64>] {
        &self.rays[self.base.n_rays()..]
    }

    pub fn ray_index(&self, w: &[i64]) -> Option<usize> {
        self.rays.iter().position(|r| r == w)
    }

    pub fn cone_rays(&self, c: usize) -> Vec<Vec<i64>> {
        self.cones[c].iter().map(|&i| self.rays[i].clone()).collect()
    }

    pub fn cone(&self, c: usize) -> RationalCone {
        RationalCone::new(self.dim(), self.cone_rays(c)).expect("fan cone")
    }

    pub fn cone_facets(&self, c: usize) -> Vec<Facet> {
        facets_of(self.dim(), &self.cone_rays(c))
            .into_iter()
            .map(|f| Facet { normal: f.normal, rays: f.rays.iter().map(|&j| self.cones[c][j]).collect() })
            .collect()
    }

    pub fn cone_contains(&self, c: usize, w: &[i64]) -> bool {
        facets_of(self.dim(), &self.cone_rays(c)).iter().all(|f| dot(&f.normal, w) >= 0)
    }

    pub fn is_simplicial(&self) -> bool {
        self.cones.iter().all(|c| c.len() == self.dim())
    }

    /// Multiplicity of a simplicial cone.
    pub fn multiplicity(&self, c: usize) -> Result<u64> {
        if self.cones[c].len() != self.dim() {
            return Err(Error::NonSimplicial);
        }
        Ok(linalg::det(&self.cone_rays(c)).unsigned_abs() as u64)
    }

    pub fn is_smooth(&self) -> bool {
        (0..self.cones.len()).all(|c| self.multiplicity(c) == Ok(1))
    }

    /// Sorts exceptional rays lexicographically, drops unused ones and sorts cones.
    pub fn normalized(mut self) -> Fan {
        let r = self.base.n_rays();
        let used: BTreeSet<usize> = self.cones.iter().flatten().copied().collect();
        let mut exc: Vec<usize> = (r..self.rays.len()).filter(|i| used.contains(i)).collect();
        exc.sort_by(|&a, &b| self.rays[a].cmp(&self.rays[b]));
        exc.dedup_by(|a, b| self.rays[*a] == self.rays[*b]);
        let mut map = vec![usize::MAX; self.rays.len()];
        let mut rays: Vec<Vec<i64>> = self.rays[..r].to_vec();
        for (i, m) in map.iter_mut().enumerate().take(r) {
            *m = i;
        }
        for &i in &exc {
            map[i] = rays.len();
            rays.push(self.rays[i].clone());
        }
        for (m, ray) in map.iter_mut().zip(&self.rays).skip(r) {
            if *m == usize::MAX {
                if let Some(j) = rays.iter().position(|x| x == ray) {
                    *m = j;
                }
            }
        }
        let mut cones: Vec<Vec<usize>> = self
            .cones
            .iter()
            .map(|c| {
                let mut c: Vec<usize> = c.iter().map(|&i| map[i]).collect();
                c.sort_unstable();
                c.dedup();
                c
            })
            .collect();
        cones.sort();
        cones.dedup();
        self.rays = rays;
        self.cones = cones;
        self
    }

    fn push_ray(&mut self, w: Vec<i64>) -> usize {
        match self.ray_index(&w) {
            Some(i) => i,
            None => {
                self.rays.push(w);
                self.rays.len() - 1
            }
        }
    }

    /// Stellar subdivision at the primitive part of `w ∈ σ`.
    pub fn stellar(&self, w: &[i64]) -> Result<Fan> {
        let w = primitive(w)?;
        if !self.base.contains(&w) {
            return Err(Error::OutsideSupport(w));
        }
        let mut out = self.clone();
        let idx = out.push_ray(w.clone());
        let mut cones = Vec::new();
        for c in 0..self.cones.len() {
            if !self.cone_contains(c, &w) {
                cones.push(self.cones[c].clone());
                continue;
            }
            for f in self.cone_facets(c) {
                if dot(&f.normal, &w) > 0 {
                    let mut nc = f.rays.clone();
                    nc.push(idx);
                    cones.push(nc);
                }
            }
        }
        out.cones = cones;
        Ok(out.normalized())
    }

    /// Pulling at an existing ray: the stellar subdivision through a ray of the fan.
    fn pull(&self, r: usize) -> Fan {
        let w = self.rays[r].clone();
        let mut cones = Vec::new();
        for c in 0..self.cones.len() {
            if !self.cones[c].contains(&r) || self.cones[c].len() == self.dim() {
                cones.push(self.cones[c].clone());
                continue;
            }
            for f in self.cone_facets(c) {
                if dot(&f.normal, &w) > 0 {
                    let mut nc = f.rays.clone();
                    nc.push(r);
                    cones.push(nc);
                }
            }
        }
        Fan { base: self.base.clone(), rays: self.rays.clone(), cones }.normalized()
    }

    /// A simplicial refinement using no new rays.
    pub fn triangulated(&self) -> Fan {
        let mut f = self.clone();
        while !f.is_simplicial() {
            for r in 0..f.rays.len() {
                f = f.pull(r);
            }
        }
        f
    }

    /// True iff every cone of `self` lies in some cone of `other`.
    pub fn refines(&self, other: &Fan) -> bool {
        (0..self.cones.len()).all(|c| {
            let rs = self.cone_rays(c);
            (0..other.cones.len()).any(|o| rs.iter().all(|r| other.cone_contains(o, r)))
        })
    }

    /// The cone of the fan whose relative interior contains `w`.
    pub fn smallest_cone_containing(&self, w: &[i64]) -> Result<RationalCone> {
        let mut best: Option<Vec<usize>> = None;
        for c in 0..self.cones.len() {
            if !self.cone_contains(c, w) {
                continue;
            }
            let mut on = self.cones[c].clone();
            for f in self.cone_facets(c) {
                if dot(&f.normal, w) == 0 {
                    on.retain(|i| f.rays.contains(i));
                }
            }
            if best.as_ref().is_none_or(|b| on.len() < b.len()) {
                best = Some(on);
            }
        }
        let b = best.ok_or_else(|| Error::OutsideSupport(w.to_vec()))?;
        RationalCone::new(self.dim(), b.iter().map(|&i| self.rays[i].clone()).collect())
    }

    /// Indices of all cones containing `w`.
    pub fn cones_containing(&self, w: &[i64]) -> Vec<usize> {
        (0..self.cones.len()).filter(|&c| self.cone_contains(c, w)).collect()
    }
}

/// Extreme rays of the full-dimensional cone `{w : ⟨n,w⟩ ≥ 0}`, or `None` if it is lower-dimensional.
fn cone_from_normals(dim: usize, normals: Vec<Vec<i64>>) -> Option<Vec<Vec<i64>>> {
    let nc = RationalCone::new(dim, normals).ok()?;
    if !nc.is_full_dim() || !nc.is_pointed() {
        return None;
    }
    let rays = nc.dual().ok()?.rays().to_vec();
    Some(rays)
}

fn fan_from_cones(x: &AffineToricVariety, cones: Vec<Vec<Vec<i64>>>) -> Fan {
    let mut f = Fan { base: x.clone(), rays: x.rays().to_vec(), cones: Vec::new() };
    for c in cones {
        let idx: Vec<usize> = c.into_iter().map(|r| f.push_ray(r)).collect();
        f.cones.push(idx);
    }
    f.normalized()
}

/// Coarsest common refinement of fans over the same base.
pub fn common_refinement(fans: &[Fan]) -> Result<Fan> {
    let Some(first) = fans.first() else {
        return Err(Error::Invalid("no fans to refine".into()));
    };
    if fans.iter().any(|f| f.base != first.base) {
        return Err(Error::BaseMismatch);
    }
    let d = first.dim();
    let mut cur: Vec<Vec<Vec<i64>>> = (0..first.cones.len()).map(|c| first.cone_rays(c)).collect();
    for f in &fans[1..] {
        let mut next = Vec::new();
        for a in &cur {
            let na: Vec<Vec<i64>> = facets_of(d, a).into_iter().map(|x| x.normal).collect();
            for c in 0..f.cones.len() {
                let mut ns = na.clone();
                ns.extend(f.cone_facets(c).into_iter().map(|x| x.normal));
                if let Some(r) = cone_from_normals(d, ns) {
                    next.push(r);
                }
            }
        }
        cur = next;
    }
    Ok(fan_from_cones(&first.base, cur))
}

/// Normal fan, restricted to `σ`, of `conv(points) + σ^∨`: the linearity domains of
/// `w ↦ min ⟨p, w⟩`.
pub fn normal_fan_of_points(x: &AffineToricVariety, points: &[Vec<Rat>]) -> Fan {
    let d = x.dim();
    let pts: BTreeSet<Vec<Rat>> = points.iter().cloned().collect();
    let pts: Vec<Vec<Rat>> = pts.into_iter().collect();
    let mut cones = Vec::new();
    for p in &pts {
        let mut ns: Vec<Vec<i64>> = x.dual_generators().to_vec();
        for q in &pts {
            if q != p {
                let diff: Vec<Rat> = q.iter().zip(p).map(|(a, b)| a - b).collect();
                let (v, _) = clear_denominators(&diff);
                ns.push(primitive(&v).expect("distinct points"));
            }
        }
        if let Some(r) = cone_from_normals(d, ns) {
            cones.push(r);
        }
    }
    fan_from_cones(x, cones)
}

/// Normal fan of an H-polyhedron with recession cone `σ^∨`, restricted to `σ`.
pub fn normal_fan_restricted(poly: &crate::ratgeom::HPolyhedron, x: &AffineToricVariety) -> Result<Fan> {
    let v = poly.vertices();
    if v.is_empty() {
        return Err(Error::Infeasible);
    }
    Ok(normal_fan_of_points(x, &v))
}

pub fn lattice_points(points: &[Vec<i64>]) -> Vec<Vec<Rat>> {
    points.iter().map(|p| crate::ratgeom::rational::to_rat_vec(p)).collect()
}
