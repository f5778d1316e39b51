use crate::error::{Error, Result};
use crate::ratgeom::linalg::{add, dot, sub};
use crate::ratgeom::rational::int;
use crate::ratgeom::HPolyhedron;
use crate::toric::AffineToricVariety;

/// A finitely generated monomial module over `σ^∨ ∩ M`, kept in minimal sorted form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialIdeal {
    sigma: Vec<Vec<i64>>,
    gens: Vec<Vec<i64>>,
}

fn in_dual(sigma: &[Vec<i64>], u: &[i64]) -> bool {
    sigma.iter().all(|v| dot(u, v) >= 0)
}

fn minimize(sigma: &[Vec<i64>], mut gens: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    gens.sort();
    gens.dedup();
    let keep: Vec<Vec<i64>> =
        gens.iter().filter(|g| !gens.iter().any(|h| h != *g && in_dual(sigma, &sub(g, h)))).cloned().collect();
    keep
}

impl MonomialIdeal {
    pub fn new(x: &AffineToricVariety, gens: Vec<Vec<i64>>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::Invalid("monomial module needs a generator".into()));
        }
        if gens.iter().any(|g| g.len() != x.dim()) {
            return Err(Error::DimensionMismatch("exponent vector length".into()));
        }
        let sigma = x.rays().to_vec();
        let gens = minimize(&sigma, gens);
        Ok(MonomialIdeal { sigma, gens })
    }

    pub fn unit(x: &AffineToricVariety) -> Self {
        MonomialIdeal { sigma: x.rays().to_vec(), gens: vec![vec![0; x.dim()]] }
    }

    /// The module of lattice points of a polyhedron with recession cone `σ^∨`.
    pub fn from_polyhedron(x: &AffineToricVariety, p: &HPolyhedron) -> Result<Self> {
        Self::new(x, p.min_generators()?)
    }

    pub fn gens(&self) -> &[Vec<i64>] {
        &self.gens
    }

    pub fn dim(&self) -> usize {
        self.gens[0].len()
    }

    pub fn contains(&self, u: &[i64]) -> bool {
        self.gens.iter().any(|g| in_dual(&self.sigma, &sub(u, g)))
    }

    /// `other ⊆ self`.
    pub fn contains_module(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Contained in `O_X`.
    pub fn is_ideal(&self) -> bool {
        self.gens.iter().all(|g| in_dual(&self.sigma, g))
    }

    pub fn is_unit(&self) -> bool {
        self.contains(&vec![0; self.dim()]) && self.is_ideal()
    }

    /// `min_g ⟨g, w⟩`.
    pub fn val(&self, w: &[i64]) -> i64 {
        self.gens.iter().map(|g| dot(g, w)).min().expect("nonempty")
    }

    pub fn product(&self, o: &MonomialIdeal) -> MonomialIdeal {
        let gens = self.gens.iter().flat_map(|a| o.gens.iter().map(move |b| add(a, b))).collect();
        MonomialIdeal { sigma: self.sigma.clone(), gens: minimize(&self.sigma, gens) }
    }

    pub fn sum(&self, o: &MonomialIdeal) -> MonomialIdeal {
        let gens = self.gens.iter().chain(&o.gens).cloned().collect();
        MonomialIdeal { sigma: self.sigma.clone(), gens: minimize(&self.sigma, gens) }
    }

    pub fn power(&self, k: u32) -> MonomialIdeal {
        let mut out = MonomialIdeal { sigma: self.sigma.clone(), gens: vec![vec![0; self.dim()]] };
        for _ in 0..k {
            out = out.product(self);
        }
        out
    }

    pub fn translate(&self, u: &[i64]) -> MonomialIdeal {
        MonomialIdeal { sigma: self.sigma.clone(), gens: self.gens.iter().map(|g| add(g, u)).collect() }
    }

    /// Section polyhedron `{u : ⟨u,w⟩ ≥ b_w}` → module, for the given ray constraints.
    pub fn from_ray_bounds(x: &AffineToricVariety, rays: &[Vec<i64>], bounds: &[i64]) -> Result<Self> {
        let p = HPolyhedron::new(x.dim(), rays.iter().cloned().zip(bounds.iter().map(|&b| int(b))).collect())?;
        Self::from_polyhedron(x, &p)
    }
}
