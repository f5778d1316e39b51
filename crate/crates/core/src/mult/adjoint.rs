//! Adjoint ideals `adj_H(X,Z)` of a reduced Cartier toric divisor `H`, and the restriction
//! sequence `0 → J(X,Z)·O_X(−H) → adj_H(X,Z) → J((H,Δ_H); Z|_H) → 0`.

use crate::divisors::{is_qcartier, MonomialIdeal, TWeilDivisor};
use crate::error::{Error, Result};
use crate::mult::boundary::{compatible_boundary_search, CancelToken};
use crate::mult::multiplier::{km_minus_z, stabilization_certificate, working_resolution};
use crate::mult::restriction::restrict_to_ray;
use crate::mult::{log_mult_ideal, mult_ideal_m, BoundarySpec, PairSpec, Term, TermBody};
use crate::ratgeom::linalg::dot;
use crate::ratgeom::rational::{ceil_i64, int, Rat};
use crate::toric::{AffineToricVariety, Fan, PivotOrder};
use num_traits::{One, Zero};

struct AdjointData {
    ideal: MonomialIdeal,
    fan: Fan,
    bounds: Vec<i64>,
    u_h: Vec<i64>,
    h_rays: Vec<usize>,
}

fn h_data(p: &PairSpec, h: &TWeilDivisor) -> Result<(Vec<i64>, Vec<usize>)> {
    let x = p.variety();
    if h.rays() != x.rays() {
        return Err(Error::DimensionMismatch("H is not a divisor on X".into()));
    }
    if h.coeffs().iter().any(|c| !c.is_zero() && !c.is_one()) {
        return Err(Error::Invalid("H must be reduced".into()));
    }
    let q = is_qcartier(h).ok_or(Error::NotCartier)?;
    if q.index != 1 {
        return Err(Error::NotCartier);
    }
    let u_h = q.slope.iter().map(|r| r.to_integer().try_into().expect("small slope")).collect();
    let h_rays: Vec<usize> = (0..x.n_rays()).filter(|&i| h.coeff(i).is_one()).collect();
    let support = p.support_rays();
    if h_rays.iter().any(|i| support.contains(i)) {
        return Err(Error::SharedComponent);
    }
    Ok((u_h, h_rays))
}

/// Stellar subdivisions at `v_i + v_j` until no cone contains two components of `H`.
fn separate(mut f: Fan, h_rays: &[usize]) -> Result<Fan> {
    loop {
        let hit = f.cones().iter().find_map(|c| {
            let hs: Vec<usize> = c.iter().copied().filter(|i| h_rays.contains(i)).collect();
            (hs.len() >= 2).then(|| (hs[0], hs[1]))
        });
        match hit {
            None => return Ok(f),
            Some((i, j)) => {
                let w: Vec<i64> = f.rays()[i].iter().zip(&f.rays()[j]).map(|(a, b)| a + b).collect();
                f = f.stellar(&w)?;
            }
        }
    }
}

fn adjoint_data(p: &PairSpec, h: &TWeilDivisor, m: i64) -> Result<AdjointData> {
    let (u_h, h_rays) = h_data(p, h)?;
    let f = separate(working_resolution(p, m, PivotOrder::Forward)?, &h_rays)?;
    let base = km_minus_z(p, m, &f)?;
    let r = p.variety().n_rays();
    let bounds: Vec<i64> = f
        .rays()
        .iter()
        .zip(&base)
        .enumerate()
        .map(|(k, (w, c))| {
            let strict = if k < r && h_rays.contains(&k) { int(1) } else { int(0) };
            -ceil_i64(&(c - int(dot(&u_h, w)) + strict))
        })
        .collect();
    let ideal = MonomialIdeal::from_ray_bounds(f.base(), f.rays(), &bounds)?;
    Ok(AdjointData { ideal, fan: f, bounds, u_h, h_rays })
}

/// `adj_{H,m}(X,Z) = f_* O_Y(⌈K_{m,Y/X} − f^{−1}(Z) − f*H + H_Y⌉)`.
pub fn adjoint_ideal_m(p: &PairSpec, h: &TWeilDivisor, m: i64) -> Result<MonomialIdeal> {
    if m < 1 {
        return Err(Error::Invalid(format!("m = {m} must be positive")));
    }
    Ok(adjoint_data(p, h, m)?.ideal)
}

pub fn adjoint_ideal(p: &PairSpec, h: &TWeilDivisor) -> Result<MonomialIdeal> {
    adjoint_ideal_m(p, h, stabilization_certificate(p.variety()).m_star)
}

/// Inversion of adjunction on a prime `H = D_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictionCheck {
    pub ray: usize,
    pub variety: AffineToricVariety,
    pub boundary: BoundarySpec,
    pub different: Vec<Rat>,
    pub image: Option<MonomialIdeal>,
    pub expected: MonomialIdeal,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactSequenceReport {
    pub m: i64,
    pub adjoint: MonomialIdeal,
    pub multiplier: MonomialIdeal,
    pub sandwich: bool,
    pub kernel_matches: bool,
    pub restriction: Option<RestrictionCheck>,
    pub restriction_note: Option<String>,
}

pub fn exact_sequence_check(p: &PairSpec, h: &TWeilDivisor) -> Result<ExactSequenceReport> {
    exact_sequence_check_with(p, h, &CancelToken::new())
}

pub fn exact_sequence_check_with(p: &PairSpec, h: &TWeilDivisor, token: &CancelToken) -> Result<ExactSequenceReport> {
    let x = p.variety();
    let m = stabilization_certificate(x).m_star;
    let data = adjoint_data(p, h, m)?;
    let j = mult_ideal_m(p, m)?;
    let twisted = j.translate(&data.u_h);
    let sandwich = data.ideal.contains_module(&twisted) && j.contains_module(&data.ideal);

    let mut bounds = data.bounds.clone();
    for (k, b) in bounds.iter_mut().enumerate().take(x.n_rays()) {
        *b = (*b).max(dot(&data.u_h, &x.rays()[k]));
    }
    let kernel = MonomialIdeal::from_ray_bounds(x, data.fan.rays(), &bounds)?;
    let kernel_matches = kernel == twisted;

    let (restriction, restriction_note) = if data.h_rays.len() != 1 {
        (None, Some("H is not prime".to_string()))
    } else {
        match restriction_check(p, h, &data, token) {
            Ok(r) => (Some(r), None),
            Err(Error::Cancelled) => return Err(Error::Cancelled),
            Err(e) => (None, Some(e.to_string())),
        }
    };
    Ok(ExactSequenceReport {
        m,
        adjoint: data.ideal,
        multiplier: j,
        sandwich,
        kernel_matches,
        restriction,
        restriction_note,
    })
}

fn restriction_check(
    p: &PairSpec,
    h: &TWeilDivisor,
    data: &AdjointData,
    token: &CancelToken,
) -> Result<RestrictionCheck> {
    let x = p.variety();
    let i = data.h_rays[0];
    let m = stabilization_certificate(x).m_star.max(1);
    let with_h = p.with_term(Term { coeff: int(1), body: TermBody::Divisor(h.clone()) })?;
    let boundary = compatible_boundary_search(&with_h, m, m, token)?
        .ok_or_else(|| Error::BadBoundary("no compatible boundary for (X, Z+H)".into()))?;
    let r = restrict_to_ray(x, i)?;
    let slope: Vec<Rat> = boundary.slope.iter().zip(&data.u_h).map(|(s, u)| s + int(*u)).collect();
    let different = r.different(&slope)?;
    let hb = BoundarySpec::new(&r.variety, TWeilDivisor::on(&r.variety, different.clone())?)?;
    let mut terms = Vec::new();
    for (t, ideal) in p.terms().iter().zip(p.ideals()) {
        terms.push(Term { coeff: t.coeff.clone(), body: TermBody::Ideal(r.restrict_ideal(x, ideal)?) });
    }
    let restricted = PairSpec::new(&r.variety, terms)?;
    let expected = log_mult_ideal(&hb, &restricted)?;
    let image = r.slice(data.fan.rays(), &data.bounds)?;
    let matches = image.as_ref() == Some(&expected);
    Ok(RestrictionCheck { ray: i, variety: r.variety, boundary, different, image, expected, matches })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plane_line() {
        let x = AffineToricVariety::new(vec![vec![1, 0], vec![0, 1]]).unwrap();
        let h = TWeilDivisor::prime(&x, 0);
        let p = PairSpec::ideal(&x, int(1), vec![vec![0, 1]]).unwrap();
        let adj = adjoint_ideal(&p, &h).unwrap();
        let rep = exact_sequence_check(&p, &h).unwrap();
        assert!(rep.sandwich && rep.kernel_matches);
        let rc = rep.restriction.unwrap();
        assert!(rc.matches, "{rc:?}");
        assert_eq!(adj, rep.adjoint);
    }
}
