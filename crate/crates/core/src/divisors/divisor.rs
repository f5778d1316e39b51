use crate::error::{Error, Result};
use crate::ratgeom::rational::{int, Rat};
use crate::ratgeom::HPolyhedron;
use crate::toric::AffineToricVariety;
use num_traits::{Signed, Zero};

/// `Σ d_i D_i` over an ordered ray list (of `X` or of a refinement).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TWeilDivisor {
    rays: Vec<Vec<i64>>,
    coeffs: Vec<Rat>,
}

impl TWeilDivisor {
    pub fn new(rays: Vec<Vec<i64>>, coeffs: Vec<Rat>) -> Result<Self> {
        if rays.len() != coeffs.len() {
            return Err(Error::DimensionMismatch(format!("{} coefficients for {} rays", coeffs.len(), rays.len())));
        }
        Ok(TWeilDivisor { rays, coeffs })
    }

    pub fn on(x: &AffineToricVariety, coeffs: Vec<Rat>) -> Result<Self> {
        Self::new(x.rays().to_vec(), coeffs)
    }

    pub fn from_ints(x: &AffineToricVariety, coeffs: &[i64]) -> Result<Self> {
        Self::on(x, coeffs.iter().map(|&c| int(c)).collect())
    }

    /// The prime divisor of ray `i`.
    pub fn prime(x: &AffineToricVariety, i: usize) -> Self {
        let coeffs = (0..x.n_rays()).map(|j| int((i == j) as i64)).collect();
        TWeilDivisor { rays: x.rays().to_vec(), coeffs }
    }

    pub fn zero(x: &AffineToricVariety) -> Self {
        TWeilDivisor { rays: x.rays().to_vec(), coeffs: vec![Rat::zero(); x.n_rays()] }
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rat {
        &self.coeffs[i]
    }

    pub fn coeff_at(&self, w: &[i64]) -> Option<&Rat> {
        self.rays.iter().position(|r| r == w).map(|i| &self.coeffs[i])
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn is_effective(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn scale(&self, k: &Rat) -> Self {
        TWeilDivisor { rays: self.rays.clone(), coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    pub fn neg(&self) -> Self {
        self.scale(&int(-1))
    }

    pub fn add(&self, o: &TWeilDivisor) -> Result<Self> {
        if self.rays != o.rays {
            return Err(Error::DimensionMismatch("divisors on different ray lists".into()));
        }
        Ok(TWeilDivisor {
            rays: self.rays.clone(),
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, o: &TWeilDivisor) -> Result<Self> {
        self.add(&o.neg())
    }

    /// Componentwise `self ≤ o`.
    pub fn le(&self, o: &TWeilDivisor) -> bool {
        self.rays == o.rays && self.coeffs.iter().zip(&o.coeffs).all(|(a, b)| a <= b)
    }

    pub fn ceil(&self) -> Self {
        TWeilDivisor { rays: self.rays.clone(), coeffs: self.coeffs.iter().map(|c| c.ceil()).collect() }
    }

    /// Pushforward to the base: keep the coefficients of the first `n` rays.
    pub fn restrict_to(&self, n: usize) -> Self {
        TWeilDivisor { rays: self.rays[..n].to_vec(), coeffs: self.coeffs[..n].to_vec() }
    }
}

/// `K` with coefficient −1 on every ray.
pub fn canonical_divisor(rays: &[Vec<i64>]) -> TWeilDivisor {
    TWeilDivisor { rays: rays.to_vec(), coeffs: vec![int(-1); rays.len()] }
}

/// `{u : ⟨u, v_i⟩ ≥ d_i}`, whose lattice points are the monomials of `O_X(−D)`.
pub fn section_polyhedron(d: &TWeilDivisor) -> HPolyhedron {
    let dim = d.rays.first().map_or(0, |r| r.len());
    HPolyhedron::new(dim, d.rays.iter().cloned().zip(d.coeffs.iter().cloned()).collect()).expect("consistent rank")
}
