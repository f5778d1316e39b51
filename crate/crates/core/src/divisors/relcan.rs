//! The relative canonical divisors `K_{m,Y/X}`, `K_{Y/X}`, `K⁻_{Y/X}` and `K^Δ_{Y/X}`.

use crate::divisors::{canonical_divisor, section_polyhedron, TWeilDivisor};
use crate::error::{Error, Result};
use crate::ratgeom::linalg;
use crate::ratgeom::polyhedron::{support, support_q};
use crate::ratgeom::rational::{dot_iq, int, lcm_dens, Rat};
use crate::ratgeom::HPolyhedron;
use crate::toric::{AffineToricVariety, Fan};

/// A rational slope `u` with `⟨u, v_i⟩ = d_i`, and the least `m` with `m·u` integral.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QCartier {
    pub index: i64,
    pub slope: Vec<Rat>,
}

pub fn is_qcartier(d: &TWeilDivisor) -> Option<QCartier> {
    let a: Vec<Vec<Rat>> = d.rays().iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
    let u = linalg::solve(&a, d.coeffs())?;
    Some(QCartier { index: lcm_dens(&u), slope: u })
}

/// `P_t = {u : ⟨u, v_i⟩ ≥ t}` over the base rays.
pub fn level_polyhedron(x: &AffineToricVariety, t: i64) -> HPolyhedron {
    HPolyhedron::new(x.dim(), x.rays().iter().map(|v| (v.clone(), int(t))).collect()).expect("rank")
}

/// `K_{m,Y/X} = K_Y − (1/m)·f♮(mK_X)`.
pub fn limiting_relcan(f: &Fan, m: i64) -> Result<TWeilDivisor> {
    if m < 1 {
        return Err(Error::Invalid(format!("m = {m} must be positive")));
    }
    let gens = level_polyhedron(f.base(), -1).scaled(m).min_generators()?;
    let c = f.rays().iter().map(|w| int(-1) - Rat::new(support(&gens, w).into(), m.into())).collect();
    TWeilDivisor::new(f.rays().to_vec(), c)
}

/// `K_{Y/X} = K_Y + f*(−K_X)`.
pub fn relcan(f: &Fan) -> Result<TWeilDivisor> {
    let minus_k = canonical_divisor(f.base().rays()).neg();
    let verts = section_polyhedron(&minus_k).vertices();
    let c = f.rays().iter().map(|w| int(-1) + support_q(&verts, w)).collect();
    TWeilDivisor::new(f.rays().to_vec(), c)
}

/// `K⁻_{Y/X} = K_Y − f*K_X`.
pub fn relcan_minus(f: &Fan) -> Result<TWeilDivisor> {
    let verts = level_polyhedron(f.base(), -1).vertices();
    let c = f.rays().iter().map(|w| int(-1) - support_q(&verts, w)).collect();
    TWeilDivisor::new(f.rays().to_vec(), c)
}

/// `K^Δ_{Y/X} = K_Y + Δ_Y − f*(K_X + Δ)` for an effective `Δ` with `K_X + Δ` ℚ-Cartier.
pub fn log_relcan(f: &Fan, delta: &TWeilDivisor) -> Result<TWeilDivisor> {
    if !delta.is_effective() {
        return Err(Error::BadBoundary("boundary is not effective".into()));
    }
    let kd = canonical_divisor(f.base().rays()).add(delta)?;
    let q = is_qcartier(&kd).ok_or(Error::NotQCartier)?;
    let r = f.base().n_rays();
    let c = f
        .rays()
        .iter()
        .enumerate()
        .map(|(i, w)| {
            let strict = if i < r { delta.coeff(i).clone() } else { int(0) };
            int(-1) + strict - dot_iq(w, &q.slope)
        })
        .collect();
    TWeilDivisor::new(f.rays().to_vec(), c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratgeom::rational::frac;
    use crate::toric::resolve;

    fn var(rays: &[&[i64]]) -> AffineToricVariety {
        AffineToricVariety::new(rays.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn quadric_relcans() {
        let x = var(&[&[1, 0], &[1, 2]]);
        let f = resolve(&Fan::trivial(&x));
        let k = relcan(&f).unwrap();
        assert_eq!(k.coeff_at(&[1, 1]), Some(&int(0)));
        assert_eq!(relcan_minus(&f).unwrap(), k);
        assert_eq!(limiting_relcan(&f, 2).unwrap(), k);
        assert_eq!(limiting_relcan(&f, 1).unwrap(), k);
        let delta = TWeilDivisor::on(&x, vec![frac(1, 2), frac(1, 2)]).unwrap();
        let kd = log_relcan(&f, &delta).unwrap();
        assert_eq!(kd.coeff_at(&[1, 1]), Some(&frac(-1, 2)));
        assert!(kd.le(&limiting_relcan(&f, 2).unwrap()));
    }

    #[test]
    fn qcartier_detection() {
        let x = var(&[&[1, 0], &[1, 2]]);
        let k = canonical_divisor(x.rays());
        let q = is_qcartier(&k).unwrap();
        assert_eq!((q.index, q.slope), (1, vec![int(-1), int(0)]));
        assert_eq!(is_qcartier(&TWeilDivisor::prime(&x, 0)).unwrap().index, 2);
        let n = var(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 2, -1]]);
        assert_eq!(is_qcartier(&canonical_divisor(n.rays())), None);
    }

    #[test]
    fn conifold_discrepancy() {
        let x = var(&[&[0, 0, 1], &[1, 0, 1], &[0, 1, 1], &[1, 1, 1]]);
        let f = Fan::trivial(&x).stellar(&[1, 1, 2]).unwrap();
        assert_eq!(relcan(&f).unwrap().coeff_at(&[1, 1, 2]), Some(&int(1)));
        assert_eq!(relcan_minus(&f).unwrap().coeff_at(&[1, 1, 2]), Some(&int(1)));
    }

    #[test]
    fn log_relcan_needs_qcartier() {
        let n = var(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 2, -1]]);
        let f = Fan::trivial(&n);
        assert_eq!(log_relcan(&f, &TWeilDivisor::zero(&n)), Err(Error::NotQCartier));
        let d = TWeilDivisor::on(&n, vec![int(0), frac(1, 2), int(0), int(0)]).unwrap();
        assert!(log_relcan(&f, &d).is_ok());
    }
}
