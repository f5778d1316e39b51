//! Rational polyhedral cones: facets, duality, triangulation, Hilbert bases.

use crate::error::{Error, Result};
use crate::ratgeom::linalg::{self, dot, kernel_line, primitive, rank, subsets};
use crate::ratgeom::rational::{int, Rat};
use std::collections::{BTreeSet, VecDeque};

/// Supporting hyperplane of a full-dimensional cone together with the rays it contains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub rays: Vec<usize>,
}

/// Facets of the full-dimensional cone generated by `rays`, ordered by normal.
pub fn facets_of(dim: usize, rays: &[Vec<i64>]) -> Vec<Facet> {
    let mut normals: BTreeSet<Vec<i64>> = BTreeSet::new();
    if dim == 1 {
        let pos = rays.iter().any(|r| r[0] > 0);
        let neg = rays.iter().any(|r| r[0] < 0);
        if pos && !neg {
            normals.insert(vec![1]);
        } else if neg && !pos {
            normals.insert(vec![-1]);
        }
    } else {
        let mut covered: Vec<Vec<usize>> = Vec::new();
        for s in subsets(rays.len(), dim - 1) {
            if covered.iter().any(|f| s.iter().all(|i| f.contains(i))) {
                continue;
            }
            let sub: Vec<Vec<i64>> = s.iter().map(|&i| rays[i].clone()).collect();
            let Some(n) = kernel_line(&sub, dim) else { continue };
            let vals: Vec<i64> = rays.iter().map(|r| dot(&n, r)).collect();
            let n = if vals.iter().all(|&v| v >= 0) {
                n
            } else if vals.iter().all(|&v| v <= 0) {
                linalg::scale(&n, -1)
            } else {
                continue;
            };
            covered.push((0..rays.len()).filter(|&i| vals[i] == 0).collect());
            normals.insert(n);
        }
    }
    normals
        .into_iter()
        .map(|n| {
            let on = (0..rays.len()).filter(|&i| dot(&n, &rays[i]) == 0).collect();
            Facet { normal: n, rays: on }
        })
        .collect()
}

/// Pulling triangulation of a full-dimensional cone using only its rays.
pub fn triangulate(dim: usize, rays: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let mut cones: Vec<Vec<usize>> = vec![(0..rays.len()).collect()];
    loop {
        if cones.iter().all(|c| c.len() == dim) {
            return cones;
        }
        for r in 0..rays.len() {
            let mut next = Vec::new();
            for c in cones {
                if c.len() == dim || !c.contains(&r) {
                    next.push(c);
                    continue;
                }
                let sub: Vec<Vec<i64>> = c.iter().map(|&i| rays[i].clone()).collect();
                for f in facets_of(dim, &sub) {
                    let fr: Vec<usize> = f.rays.iter().map(|&j| c[j]).collect();
                    if !fr.contains(&r) {
                        let mut nc = fr;
                        nc.push(r);
                        nc.sort_unstable();
                        next.push(nc);
                    }
                }
            }
            cones = next;
        }
    }
}

/// A cone in `ℤ^dim` given by primitive generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalCone {
    dim: usize,
    rays: Vec<Vec<i64>>,
}

impl RationalCone {
    /// Normalizes generators to primitive vectors, drops duplicates and, for pointed
    /// full-dimensional cones, non-extreme generators. Input order is otherwise kept.
    pub fn new(dim: usize, gens: Vec<Vec<i64>>) -> Result<Self> {
        let mut rays: Vec<Vec<i64>> = Vec::new();
        for g in gens {
            if g.len() != dim {
                return Err(Error::DimensionMismatch(format!("generator {g:?} in rank {dim}")));
            }
            let p = primitive(&g)?;
            if !rays.contains(&p) {
                rays.push(p);
            }
        }
        let mut cone = RationalCone { dim, rays };
        if cone.is_full_dim() && cone.is_pointed() {
            let facets = cone.facets();
            let keep: Vec<Vec<i64>> = (0..cone.rays.len())
                .filter(|&i| {
                    let ns: Vec<Vec<i64>> =
                        facets.iter().filter(|f| f.rays.contains(&i)).map(|f| f.normal.clone()).collect();
                    dim == 1 || rank(&ns) == dim - 1
                })
                .map(|i| cone.rays[i].clone())
                .collect();
            cone.rays = keep;
        }
        Ok(cone)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn rank(&self) -> usize {
        rank(&self.rays)
    }

    pub fn is_full_dim(&self) -> bool {
        self.rank() == self.dim
    }

    pub fn is_simplicial(&self) -> bool {
        self.rank() == self.rays.len()
    }

    /// Pointed iff some linear form is positive on every generator.
    pub fn is_pointed(&self) -> bool {
        if self.rays.is_empty() {
            return true;
        }
        let (c, _) = self.in_span_coords();
        let k = c.first().map_or(0, |v| v.len());
        let ns: Vec<Vec<i64>> = facets_of(k, &c).into_iter().map(|f| f.normal).collect();
        rank(&ns) == k
    }

    /// Facets; meaningful for full-dimensional cones.
    pub fn facets(&self) -> Vec<Facet> {
        facets_of(self.dim, &self.rays)
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        if self.is_full_dim() {
            self.facets().iter().all(|f| dot(&f.normal, x) >= 0)
        } else {
            let q: Vec<Rat> = x.iter().map(|&v| int(v)).collect();
            let a: Vec<Vec<Rat>> = (0..self.dim).map(|i| self.rays.iter().map(|r| int(r[i])).collect()).collect();
            match linalg::solve(&a, &q) {
                None => false,
                Some(_) => {
                    let (c, basis) = self.in_span_coords();
                    let xc = linalg::coords(&basis, x).expect("in span");
                    let k = basis.len();
                    facets_of(k, &c)
                        .iter()
                        .all(|f| crate::ratgeom::rational::dot_iq(&f.normal, &xc) >= Rat::from_integer(0.into()))
                }
            }
        }
    }

    /// The dual cone `{u : ⟨u,w⟩ ≥ 0 ∀ w ∈ σ}`.
    pub fn dual(&self) -> Result<RationalCone> {
        if !self.is_pointed() {
            return Err(Error::NonPointed(format!("{:?}", self.rays)));
        }
        if !self.is_full_dim() {
            return Err(Error::NonPointed("dual of a lower-dimensional cone contains a line".into()));
        }
        let ns: Vec<Vec<i64>> = self.facets().into_iter().map(|f| f.normal).collect();
        RationalCone::new(self.dim, ns)
    }

    /// Index of the sublattice spanned by the generators of a simplicial cone.
    pub fn multiplicity(&self) -> Result<u64> {
        if !self.is_simplicial() {
            return Err(Error::NonSimplicial);
        }
        Ok(linalg::maximal_minor_gcd(&self.rays) as u64)
    }

    /// Rays of the smallest face containing `x` (which must lie in the cone).
    pub fn face_containing(&self, x: &[i64]) -> Vec<usize> {
        let mut on: Vec<usize> = (0..self.rays.len()).collect();
        for f in self.facets() {
            if dot(&f.normal, x) == 0 {
                on.retain(|i| f.rays.contains(i));
            }
        }
        on
    }

    /// Generators expressed in a lattice basis of the saturated span.
    fn in_span_coords(&self) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
        let eqs = linalg::integer_kernel(&self.rays, self.dim);
        let basis = if eqs.is_empty() {
            (0..self.dim).map(|i| (0..self.dim).map(|j| (i == j) as i64).collect()).collect()
        } else {
            linalg::integer_kernel(&eqs, self.dim)
        };
        let c = self
            .rays
            .iter()
            .map(|r| {
                linalg::coords(&basis, r)
                    .expect("generator in its span")
                    .iter()
                    .map(crate::ratgeom::rational::floor_i64)
                    .collect()
            })
            .collect();
        (c, basis)
    }
}

/// Lattice points of the half-open parallelepiped `Σ [0,1)·g_i` of a full-dimensional simplicial cone.
pub fn parallelepiped_points(gens: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let d = gens.len();
    let mcols: Vec<Vec<Rat>> = (0..d).map(|i| (0..d).map(|j| int(gens[j][i])).collect()).collect();
    let delta = linalg::det(&(0..d).map(|i| (0..d).map(|j| gens[j][i]).collect()).collect::<Vec<_>>());
    let big_d = delta.abs();
    // Λ = |D| · M⁻¹ x  (mod |D|)
    let inv = invert(&mcols);
    let gen_cols: Vec<Vec<i128>> = (0..d)
        .map(|j| {
            (0..d)
                .map(|i| {
                    let v = &inv[i][j] * Rat::from_integer(big_d.into());
                    let v: i128 = v.to_integer().try_into().expect("small adjugate");
                    v.rem_euclid(big_d)
                })
                .collect()
        })
        .collect();
    let mut seen: BTreeSet<Vec<i128>> = BTreeSet::new();
    let zero = vec![0i128; d];
    seen.insert(zero.clone());
    let mut queue = VecDeque::from([zero]);
    while let Some(l) = queue.pop_front() {
        for c in &gen_cols {
            let n: Vec<i128> = l.iter().zip(c).map(|(a, b)| (a + b).rem_euclid(big_d)).collect();
            if seen.insert(n.clone()) {
                queue.push_back(n);
            }
        }
    }
    seen.into_iter()
        .map(|l| {
            (0..d)
                .map(|i| {
                    let s: i128 = (0..d).map(|j| gens[j][i] as i128 * l[j]).sum();
                    (s / big_d) as i64
                })
                .collect()
        })
        .collect()
}

fn invert(m: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = m.len();
    let mut aug: Vec<Vec<Rat>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut r = r.clone();
            r.extend((0..n).map(|j| int((i == j) as i64)));
            r
        })
        .collect();
    linalg::rref(&mut aug);
    aug.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// The Hilbert basis of a pointed cone, sorted lexicographically.
pub fn hilbert_basis(cone: &RationalCone) -> Result<Vec<Vec<i64>>> {
    if !cone.is_pointed() {
        return Err(Error::NonPointed(format!("{:?}", cone.rays)));
    }
    if cone.rays.is_empty() {
        return Ok(Vec::new());
    }
    if !cone.is_full_dim() {
        let (c, basis) = cone.in_span_coords();
        let k = basis.len();
        let inner = hilbert_basis(&RationalCone { dim: k, rays: c })?;
        let mut out: Vec<Vec<i64>> =
            inner.iter().map(|x| (0..cone.dim).map(|i| (0..k).map(|j| x[j] * basis[j][i]).sum()).collect()).collect();
        out.sort();
        return Ok(out);
    }
    let d = cone.dim;
    let mut cand: BTreeSet<Vec<i64>> = cone.rays.iter().cloned().collect();
    let simplices = if cone.is_simplicial() { vec![(0..d).collect()] } else { triangulate(d, &cone.rays) };
    for s in &simplices {
        let g: Vec<Vec<i64>> = s.iter().map(|&i| cone.rays[i].clone()).collect();
        for p in parallelepiped_points(&g) {
            if !linalg::is_zero(&p) {
                cand.insert(p);
            }
        }
    }
    let facets = cone.facets();
    let inside = |x: &[i64]| facets.iter().all(|f| dot(&f.normal, x) >= 0);
    let all: Vec<Vec<i64>> = cand.iter().cloned().collect();
    Ok(all.iter().filter(|x| !all.iter().any(|y| y != *x && inside(&linalg::sub(x, y)))).cloned().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cone(rays: &[&[i64]]) -> RationalCone {
        RationalCone::new(rays[0].len(), rays.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn dualize_examples() {
        assert_eq!(cone(&[&[1, 0], &[0, 1]]).dual().unwrap().rays(), &[vec![0, 1], vec![1, 0]]);
        let q = cone(&[&[1, 0], &[1, 2]]);
        let mut d = q.dual().unwrap().rays().to_vec();
        d.sort();
        assert_eq!(d, vec![vec![0, 1], vec![2, -1]]);
        let c = cone(&[&[0, 0, 1], &[1, 0, 1], &[0, 1, 1], &[1, 1, 1]]);
        let dd = c.dual().unwrap().dual().unwrap();
        let mut a = dd.rays().to_vec();
        a.sort();
        let mut b = c.rays().to_vec();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn conifold_dual_generators() {
        let c = cone(&[&[0, 0, 1], &[1, 0, 1], &[0, 1, 1], &[1, 1, 1]]);
        let mut d = c.dual().unwrap().rays().to_vec();
        d.sort();
        assert_eq!(d, vec![vec![-1, 0, 1], vec![0, -1, 1], vec![0, 1, 0], vec![1, 0, 0]]);
    }

    #[test]
    fn hilbert_bases() {
        assert_eq!(hilbert_basis(&cone(&[&[1, 0], &[0, 1]])).unwrap(), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(
            hilbert_basis(&cone(&[&[1, 0], &[2, 5]])).unwrap(),
            vec![vec![1, 0], vec![1, 1], vec![1, 2], vec![2, 5]]
        );
        assert_eq!(hilbert_basis(&cone(&[&[1, 0], &[1, 2]])).unwrap(), vec![vec![1, 0], vec![1, 1], vec![1, 2]]);
        let hb = hilbert_basis(&cone(&[&[1, 0], &[1, 5]])).unwrap();
        assert_eq!(hb, (0..=5).map(|k| vec![1, k]).collect::<Vec<_>>());
        let mut hb3 = hilbert_basis(&cone(&[&[0, 0, 1], &[1, 0, 1], &[0, 1, 1], &[1, 1, 1]])).unwrap();
        hb3.sort();
        assert_eq!(hb3.len(), 4);
    }

    #[test]
    fn hilbert_basis_of_lower_dim_cone() {
        let c = RationalCone::new(3, vec![vec![1, 0, 0], vec![1, 2, 0]]).unwrap();
        assert_eq!(hilbert_basis(&c).unwrap(), vec![vec![1, 0, 0], vec![1, 1, 0], vec![1, 2, 0]]);
        assert_eq!(c.multiplicity().unwrap(), 2);
    }

    #[test]
    fn multiplicities() {
        assert_eq!(cone(&[&[1, 0], &[0, 1]]).multiplicity().unwrap(), 1);
        assert_eq!(cone(&[&[1, 0], &[1, 2]]).multiplicity().unwrap(), 2);
        assert_eq!(cone(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 2]]).multiplicity().unwrap(), 2);
        let c = cone(&[&[0, 0, 1], &[1, 0, 1], &[0, 1, 1], &[1, 1, 1]]);
        assert_eq!(c.multiplicity(), Err(Error::NonSimplicial));
    }

    #[test]
    fn redundant_generators_dropped() {
        let c = cone(&[&[1, 0], &[1, 1], &[2, 4]]);
        assert_eq!(c.rays(), &[vec![1, 0], vec![1, 2]]);
        let half = RationalCone::new(2, vec![vec![1, 0], vec![-1, 0], vec![0, 1]]).unwrap();
        assert!(!half.is_pointed());
        assert!(matches!(half.dual(), Err(Error::NonPointed(_))));
    }

    #[test]
    fn triangulation_covers_conifold() {
        let rays = vec![vec![0, 0, 1], vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 1]];
        let t = triangulate(3, &rays);
        assert_eq!(t.len(), 2);
        let total: i128 =
            t.iter().map(|s| linalg::det(&s.iter().map(|&i| rays[i].clone()).collect::<Vec<_>>()).abs()).sum();
        assert_eq!(total, 2);
    }
}
