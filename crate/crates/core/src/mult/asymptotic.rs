//! Asymptotic multiplier ideals `J(X, c·‖D‖)`.

use crate::divisors::{section_polyhedron, MonomialIdeal, TWeilDivisor};
use crate::error::{Error, Result};
use crate::mult::{mult_ideal, PairSpec};
use crate::ratgeom::rational::{int, Rat};
use crate::toric::AffineToricVariety;
use num_integer::Integer;
use num_traits::Signed;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsymptoticResult {
    pub ideal: MonomialIdeal,
    pub n_star: i64,
    pub checked: Vec<i64>,
}

/// Base ideal of `|nD|`: the image of `H⁰(O_X(nD)) ⊗ O_X(−nD) → O_X`.
pub fn base_ideal(x: &AffineToricVariety, d: &TWeilDivisor, n: i64) -> Result<MonomialIdeal> {
    let nd = d.scale(&int(n));
    let sections = match MonomialIdeal::from_polyhedron(x, &section_polyhedron(&nd.neg())) {
        Ok(s) => s,
        Err(Error::Infeasible) => return Err(Error::EmptyLinearSystem),
        Err(e) => return Err(e),
    };
    let twist = MonomialIdeal::from_polyhedron(x, &section_polyhedron(&nd))?;
    Ok(sections.product(&twist))
}

/// The maximal element of `J(X, (c/n)·b_n)` along `n ∈ n*·{1,2,4,…}`, where `n*` clears the
/// vertex denominators of the section polyhedra of `D` and `−D`. Stops after two consecutive
/// agreements.
pub fn asymptotic_mult_ideal(x: &AffineToricVariety, d: &TWeilDivisor, c: &Rat) -> Result<AsymptoticResult> {
    if !c.is_positive() {
        return Err(Error::Invalid("weight c must be positive".into()));
    }
    if !d.is_integral() {
        return Err(Error::NotIntegral);
    }
    let n_star =
        section_polyhedron(d).vertex_denominator_lcm().lcm(&section_polyhedron(&d.neg()).vertex_denominator_lcm());
    let eval = |n: i64| -> Result<MonomialIdeal> {
        let b = base_ideal(x, d, n)?;
        let p = PairSpec::ideal(x, c / int(n), b.gens().to_vec())?;
        Ok(mult_ideal(&p)?.0)
    };
    let mut n = n_star;
    let mut checked = vec![n];
    let mut cur = eval(n)?;
    let mut agreements = 0;
    while agreements < 2 && checked.len() < 6 {
        n *= 2;
        checked.push(n);
        let next = eval(n)?;
        if next == cur {
            agreements += 1;
        } else {
            agreements = 0;
            cur = next;
        }
    }
    Ok(AsymptoticResult { ideal: cur, n_star, checked })
}
