use crate::divisors::relcan::level_polyhedron;
use crate::divisors::{log_relcan, MonomialIdeal, TWeilDivisor};
use crate::error::{Error, Result};
use crate::mult::{BoundarySpec, PairSpec};
use crate::ratgeom::polyhedron::support;
use crate::ratgeom::rational::{ceil_i64, den_i64, int, lcm_dens, Rat};
use crate::toric::{log_resolution_with, AffineToricVariety, Fan, PivotOrder};
use num_integer::Integer;

/// `m* = lcm` of the vertex denominators of `P₁ = {⟨u,v_i⟩ ≥ −1}`; `K_{m*,Y/X} = K⁻_{Y/X}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizationCertificate {
    pub m_star: i64,
    pub vertices: Vec<Vec<Rat>>,
    pub denominators: Vec<i64>,
}

pub fn stabilization_certificate(x: &AffineToricVariety) -> StabilizationCertificate {
    let vertices = level_polyhedron(x, -1).vertices();
    let denominators: Vec<i64> = vertices.iter().map(lcm_dens).collect();
    let m_star = denominators.iter().fold(1i64, |a, b| a.lcm(b));
    StabilizationCertificate { m_star, vertices, denominators }
}

/// `f_* O_Y(E) = {u : ⟨u, w⟩ ≥ −e_w for every ray w}`.
pub fn pushforward_module(f: &Fan, e: &TWeilDivisor) -> Result<MonomialIdeal> {
    if !e.is_integral() || e.rays() != f.rays() {
        return Err(Error::NotIntegral);
    }
    let b: Vec<i64> = e.coeffs().iter().map(|c| -ceil_i64(c)).collect();
    MonomialIdeal::from_ray_bounds(f.base(), f.rays(), &b)
}

/// `f_* O_Y(⌈C⌉)` for a rational divisor `C` on the rays of `f`.
pub fn pushforward_ceiling(f: &Fan, coeffs: &[Rat]) -> Result<MonomialIdeal> {
    let b: Vec<i64> = coeffs.iter().map(|c| -ceil_i64(c)).collect();
    MonomialIdeal::from_ray_bounds(f.base(), f.rays(), &b)
}

/// Log resolution of `(X, Z + O_X(−mK_X))`.
pub fn working_resolution(p: &PairSpec, m: i64, order: PivotOrder) -> Result<Fan> {
    let x = p.variety();
    log_resolution_with(x, &p.ideal_gens(), &[level_polyhedron(x, -1).scaled(m)], order)
}

/// Coefficients of `K_{m,Y/X} − f^{−1}(Z)` on the rays of `f`.
pub fn km_minus_z(p: &PairSpec, m: i64, f: &Fan) -> Result<Vec<Rat>> {
    let gens = level_polyhedron(p.variety(), -1).scaled(m).min_generators()?;
    Ok(f.rays().iter().map(|w| int(-1) - Rat::new(support(&gens, w).into(), m.into()) - p.z_val(w)).collect())
}

/// `J_m(X,Z)` computed on a given log resolution of `(X, Z + O_X(−mK_X))`.
pub fn mult_ideal_m_on(p: &PairSpec, m: i64, f: &Fan) -> Result<MonomialIdeal> {
    if m < 1 {
        return Err(Error::Invalid(format!("m = {m} must be positive")));
    }
    pushforward_ceiling(f, &km_minus_z(p, m, f)?)
}

pub fn mult_ideal_m_with(p: &PairSpec, m: i64, order: PivotOrder) -> Result<MonomialIdeal> {
    mult_ideal_m_on(p, m, &working_resolution(p, m, order)?)
}

/// `J_m(X,Z) = f_* O_Y(⌈K_{m,Y/X} − f^{−1}(Z)⌉)`.
pub fn mult_ideal_m(p: &PairSpec, m: i64) -> Result<MonomialIdeal> {
    mult_ideal_m_with(p, m, PivotOrder::Forward)
}

/// `J(X,Z) = J_{m*}(X,Z)`.
pub fn mult_ideal(p: &PairSpec) -> Result<(MonomialIdeal, StabilizationCertificate)> {
    let cert = stabilization_certificate(p.variety());
    Ok((mult_ideal_m(p, cert.m_star)?, cert))
}

/// `J((X,Δ);Z) = f_* O_Y(⌈K^Δ_{Y/X} − f^{−1}(Z)⌉)`.
pub fn log_mult_ideal(b: &BoundarySpec, p: &PairSpec) -> Result<MonomialIdeal> {
    let x = p.variety();
    if b.delta.coeffs().iter().any(|c| *c >= int(1)) {
        return Err(Error::BadBoundary("⌊Δ⌋ ≠ 0".into()));
    }
    let support = p.support_rays();
    if (0..x.n_rays()).any(|i| support.contains(&i) && *b.delta.coeff(i) > int(0)) {
        return Err(Error::BadBoundary("Δ shares a component with Z".into()));
    }
    let f = log_resolution_with(x, &p.ideal_gens(), &[], PivotOrder::Forward)?;
    let kd = log_relcan(&f, &b.delta)?;
    let c: Vec<Rat> = f.rays().iter().zip(kd.coeffs()).map(|(w, k)| k - p.z_val(w)).collect();
    pushforward_ceiling(&f, &c)
}

/// Denominator of a rational as used for candidate grids.
pub fn denominator(r: &Rat) -> i64 {
    den_i64(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratgeom::rational::frac;

    fn var(rays: &[&[i64]]) -> AffineToricVariety {
        AffineToricVariety::new(rays.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn smooth_trivial() {
        let x = var(&[&[1, 0], &[0, 1]]);
        for m in 1..4 {
            assert!(mult_ideal_m(&PairSpec::trivial(&x), m).unwrap().is_unit());
        }
    }

    #[test]
    fn cusp_values() {
        let x = var(&[&[1, 0], &[0, 1]]);
        let cusp = vec![vec![2, 0], vec![0, 3]];
        let maximal = MonomialIdeal::new(&x, vec![vec![1, 0], vec![0, 1]]).unwrap();
        let p = PairSpec::ideal(&x, frac(5, 6), cusp.clone()).unwrap();
        assert_eq!(mult_ideal_m(&p, 1).unwrap(), maximal);
        let p = PairSpec::ideal(&x, int(1), cusp.clone()).unwrap();
        assert_eq!(mult_ideal(&p).unwrap().0, maximal);
        let p = PairSpec::ideal(&x, frac(4, 5), cusp).unwrap();
        assert!(mult_ideal(&p).unwrap().0.is_unit());
    }

    #[test]
    fn quadric_cone() {
        let x = var(&[&[1, 0], &[1, 2]]);
        assert!(mult_ideal_m(&PairSpec::trivial(&x), 2).unwrap().is_unit());
        let p = PairSpec::ideal(&x, int(1), vec![vec![0, 1], vec![1, 0], vec![2, -1]]).unwrap();
        let (j, cert) = mult_ideal(&p).unwrap();
        assert_eq!(cert.m_star, 1);
        assert_eq!(j.gens(), &[vec![0, 1], vec![1, 0], vec![2, -1]]);
        let d = TWeilDivisor::on(&x, vec![frac(1, 2), frac(1, 2)]).unwrap();
        let b = BoundarySpec::new(&x, d).unwrap();
        assert!(log_mult_ideal(&b, &PairSpec::trivial(&x)).unwrap().is_unit());
    }

    #[test]
    fn nqg_certificate() {
        let x = var(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 2, -1]]);
        let c = stabilization_certificate(&x);
        assert_eq!(c.m_star, 2);
        assert_eq!(c.vertices, vec![vec![int(-1), frac(-1, 2), int(-1)], vec![int(0), int(-1), int(-1)]]);
    }
}
