use crate::divisors::{is_qcartier, limit_val, section_polyhedron, MonomialIdeal, TWeilDivisor};
use crate::error::{Error, Result};
use crate::ratgeom::rational::{dot_iq, int, Rat};
use crate::toric::{AffineToricVariety, DivisorialValuation};
use num_traits::{Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TermBody {
    Ideal(MonomialIdeal),
    Divisor(TWeilDivisor),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Rat,
    pub body: TermBody,
}

/// `(X, Z)` with `Z = Σ a_k Z_k`, `a_k ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairSpec {
    x: AffineToricVariety,
    terms: Vec<Term>,
    ideals: Vec<MonomialIdeal>,
}

impl PairSpec {
    pub fn new(x: &AffineToricVariety, terms: Vec<Term>) -> Result<Self> {
        let mut ideals = Vec::with_capacity(terms.len());
        for t in &terms {
            if t.coeff.is_negative() {
                return Err(Error::Invalid("pair coefficients must be nonnegative".into()));
            }
            ideals.push(match &t.body {
                TermBody::Ideal(i) => {
                    if !i.is_ideal() {
                        return Err(Error::Invalid("pair bodies must be ideals of O_X".into()));
                    }
                    i.clone()
                }
                TermBody::Divisor(d) => {
                    if d.rays() != x.rays() {
                        return Err(Error::DimensionMismatch("divisor body not on X".into()));
                    }
                    if !d.is_effective() {
                        return Err(Error::Invalid("divisor bodies must be effective".into()));
                    }
                    MonomialIdeal::from_polyhedron(x, &section_polyhedron(d))?
                }
            });
        }
        Ok(PairSpec { x: x.clone(), terms, ideals })
    }

    pub fn trivial(x: &AffineToricVariety) -> Self {
        PairSpec { x: x.clone(), terms: Vec::new(), ideals: Vec::new() }
    }

    pub fn ideal(x: &AffineToricVariety, coeff: Rat, gens: Vec<Vec<i64>>) -> Result<Self> {
        Self::new(x, vec![Term { coeff, body: TermBody::Ideal(MonomialIdeal::new(x, gens)?) }])
    }

    pub fn divisor(x: &AffineToricVariety, coeff: Rat, d: TWeilDivisor) -> Result<Self> {
        Self::new(x, vec![Term { coeff, body: TermBody::Divisor(d) }])
    }

    pub fn variety(&self) -> &AffineToricVariety {
        &self.x
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// The scheme-theoretic ideals `I_{Z_k}` (divisor bodies become `O_X(−D)`).
    pub fn ideals(&self) -> &[MonomialIdeal] {
        &self.ideals
    }

    pub fn ideal_gens(&self) -> Vec<Vec<Vec<i64>>> {
        self.ideals.iter().map(|i| i.gens().to_vec()).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.terms.iter().all(|t| t.coeff.is_zero())
    }

    pub fn scaled(&self, t: &Rat) -> PairSpec {
        let mut p = self.clone();
        for term in &mut p.terms {
            term.coeff = &term.coeff * t;
        }
        p
    }

    pub fn with_term(&self, term: Term) -> Result<PairSpec> {
        let mut terms = self.terms.clone();
        terms.push(term);
        PairSpec::new(&self.x, terms)
    }

    /// `Z(w) = Σ a_k · val_w(I_{Z_k})`.
    pub fn z_val(&self, w: &[i64]) -> Rat {
        let mut s = Rat::zero();
        for (t, i) in self.terms.iter().zip(&self.ideals) {
            if !t.coeff.is_zero() {
                s += &t.coeff * int(i.val(w));
            }
        }
        s
    }

    /// `Z(w)` with divisor bodies pulled back as ℚ-Cartier divisors (ideal bodies unchanged).
    pub fn z_val_pullback(&self, w: &[i64]) -> Result<Rat> {
        let mut s = Rat::zero();
        for (t, i) in self.terms.iter().zip(&self.ideals) {
            let v = match &t.body {
                TermBody::Ideal(_) => int(i.val(w)),
                TermBody::Divisor(d) => match is_qcartier(d) {
                    Some(q) => dot_iq(w, &q.slope),
                    None => limit_val(&DivisorialValuation { w: w.to_vec(), q: 1 }, d)?,
                },
            };
            s += &t.coeff * v;
        }
        Ok(s)
    }

    /// Positions of base rays meeting the divisorial support of `Z`.
    pub fn support_rays(&self) -> Vec<usize> {
        (0..self.x.n_rays()).filter(|&i| self.z_val(&self.x.rays()[i]).is_positive()).collect()
    }
}

/// An effective `Δ` with `K_X + Δ` ℚ-Cartier, together with the slope of `K_X + Δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundarySpec {
    pub delta: TWeilDivisor,
    pub slope: Vec<Rat>,
}

impl BoundarySpec {
    pub fn new(x: &AffineToricVariety, delta: TWeilDivisor) -> Result<Self> {
        if delta.rays() != x.rays() {
            return Err(Error::DimensionMismatch("boundary not on X".into()));
        }
        if !delta.is_effective() {
            return Err(Error::BadBoundary("boundary is not effective".into()));
        }
        let kd = crate::divisors::canonical_divisor(x.rays()).add(&delta)?;
        let q = is_qcartier(&kd).ok_or(Error::NotQCartier)?;
        Ok(BoundarySpec { delta, slope: q.slope })
    }
}
