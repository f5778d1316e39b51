//! Valuations of ideals and divisors, divisorial parts and the two pullbacks.

use crate::divisors::{section_polyhedron, MonomialIdeal, TWeilDivisor};
use crate::error::{Error, Result};
use crate::ratgeom::polyhedron::{support, support_q};
use crate::ratgeom::rational::int;
use crate::ratgeom::Rat;
use crate::toric::{AffineToricVariety, DivisorialValuation, Fan};

/// `v(I) = q · min_g ⟨g, w⟩`.
pub fn val_ideal(v: &DivisorialValuation, i: &MonomialIdeal) -> Rat {
    int(v.q * i.val(&v.w))
}

/// `v♮(D) = v(O_X(−D))`, an integer program over the section polyhedron.
pub fn nat_val(v: &DivisorialValuation, d: &TWeilDivisor) -> Result<Rat> {
    if !d.is_integral() {
        return Err(Error::NotIntegral);
    }
    let (val, _) = section_polyhedron(d).ilp_min(&v.w)?;
    Ok(val * int(v.q))
}

/// `v(D) = lim v♮(kD)/k`, the linear relaxation of `nat_val`.
pub fn limit_val(v: &DivisorialValuation, d: &TWeilDivisor) -> Result<Rat> {
    let (val, _) = section_polyhedron(d).lp_min(&v.w)?;
    Ok(val * int(v.q))
}

/// Coefficient `min_g ⟨g, v_i⟩` at each ray of `X`.
pub fn divisorial_part(x: &AffineToricVariety, i: &MonomialIdeal) -> TWeilDivisor {
    let c = x.rays().iter().map(|v| int(i.val(v))).collect();
    TWeilDivisor::on(x, c).expect("one coefficient per ray")
}

/// `I^∨∨ = O_X(−divisorial_part(I))`.
pub fn reflexive_hull(x: &AffineToricVariety, i: &MonomialIdeal) -> Result<MonomialIdeal> {
    MonomialIdeal::from_polyhedron(x, &section_polyhedron(&divisorial_part(x, i)))
}

/// `f♮D`: the divisor of `O_X(−D)·O_Y`, coefficient `min ⟨g, w⟩` over generators `g`.
pub fn nat_pullback(f: &Fan, d: &TWeilDivisor) -> Result<TWeilDivisor> {
    if !d.is_integral() {
        return Err(Error::NotIntegral);
    }
    let gens = section_polyhedron(d).min_generators()?;
    let c = f.rays().iter().map(|w| int(support(&gens, w))).collect();
    TWeilDivisor::new(f.rays().to_vec(), c)
}

/// `f*D = Σ val_E(D)·E`, coefficient `lp_min` over the section polyhedron.
pub fn pullback(f: &Fan, d: &TWeilDivisor) -> Result<TWeilDivisor> {
    let verts = section_polyhedron(d).vertices();
    if verts.is_empty() {
        return Err(Error::Infeasible);
    }
    let c = f.rays().iter().map(|w| support_q(&verts, w)).collect();
    TWeilDivisor::new(f.rays().to_vec(), c)
}
