use crate::divisors::{canonical_divisor, is_qcartier, section_polyhedron, TWeilDivisor};
use crate::error::{Error, Result};
use crate::mult::{PairSpec, TermBody};
use crate::ratgeom::polyhedron::support;
use crate::ratgeom::rational::{int, is_integral, lcm_dens};
use crate::sing::classify::CanProfile;
use crate::toric::{log_resolution, resolve, Fan};
use num_integer::Integer;

/// `K_X + Z` as a Weil ℚ-divisor; every body must be a ℚ-Cartier divisor.
fn k_plus_z(p: &PairSpec) -> Result<TWeilDivisor> {
    let x = p.variety();
    let mut kz = canonical_divisor(x.rays());
    for (k, t) in p.terms().iter().enumerate() {
        match &t.body {
            TermBody::Divisor(d) if is_qcartier(d).is_some() => kz = kz.add(&d.scale(&t.coeff))?,
            _ => return Err(Error::NotQCartierBody(k)),
        }
    }
    Ok(kz)
}

/// Least `m₀` such that every multiple of `m₀` makes `m(K_X+Z)` integral with an integral
/// section polyhedron; the certified set is `m₀ℤ_{>0}`.
pub fn certified_inclusion_m(p: &PairSpec) -> Result<i64> {
    let kz = k_plus_z(p)?;
    let mut m = lcm_dens(kz.coeffs());
    for t in p.terms() {
        m = m.lcm(&lcm_dens([&t.coeff]));
    }
    Ok(m.lcm(&section_polyhedron(&kz.neg()).vertex_denominator_lcm()))
}

/// A log resolution of `(X, Z + O_X(mK_X))` further subdivided at every canonical candidate.
fn high_resolution(p: &PairSpec, e: &TWeilDivisor) -> Result<Fan> {
    let x = p.variety();
    let mut f = log_resolution(x, &p.ideal_gens(), &[section_polyhedron(&e.neg())])?;
    let prof = CanProfile::new(p)?;
    for w in prof.candidates(&prof.hilbert_bases()?)? {
        if f.ray_index(&w).is_none() {
            f = f.stellar(&w)?;
        }
    }
    Ok(resolve(&f))
}

/// `O_X(m(K_X+Z))·O_Y ⊆ O_Y(m(K_Y+Z_Y))` with `Z_Y` the proper transform.
pub fn canonical_inclusion_check(p: &PairSpec, m: i64) -> Result<bool> {
    if m < 1 {
        return Err(Error::Invalid(format!("m = {m} must be positive")));
    }
    let e = k_plus_z(p)?.scale(&int(m));
    if !p.terms().iter().all(|t| is_integral(&(&t.coeff * int(m)))) || !e.is_integral() {
        return Err(Error::Invalid(format!("m = {m} does not clear the denominators of K_X + Z")));
    }
    let gens = section_polyhedron(&e.neg()).min_generators()?;
    let f = high_resolution(p, &e)?;
    let r = p.variety().n_rays();
    Ok(f.rays().iter().enumerate().all(|(k, w)| {
        let bound = if k < r { -e.coeff(k).to_integer() } else { m.into() };
        num_bigint::BigInt::from(support(&gens, w)) >= bound
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toric::AffineToricVariety;

    #[test]
    fn examples() {
        let x = AffineToricVariety::new(vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert!(canonical_inclusion_check(&PairSpec::trivial(&x), 1).unwrap());
        let q = AffineToricVariety::new(vec![vec![1, 0], vec![1, 2]]).unwrap();
        assert!(canonical_inclusion_check(&PairSpec::trivial(&q), 2).unwrap());
        let l = PairSpec::divisor(&q, int(1), TWeilDivisor::prime(&q, 0)).unwrap();
        assert_eq!(certified_inclusion_m(&l).unwrap(), 2);
        assert!(!canonical_inclusion_check(&l, 2).unwrap());
        let i = PairSpec::ideal(&q, int(1), vec![vec![1, 0]]).unwrap();
        assert_eq!(canonical_inclusion_check(&i, 1), Err(Error::NotQCartierBody(0)));
    }
}
