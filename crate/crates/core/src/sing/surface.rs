//! Minimal resolutions of toric surfaces and their intersection theory.

use crate::divisors::relcan::level_polyhedron;
use crate::error::{Error, Result};
use crate::ratgeom::cone::hilbert_basis;
use crate::ratgeom::linalg;
use crate::ratgeom::polyhedron::support_q;
use crate::ratgeom::rational::int;
use crate::toric::{AffineToricVariety, Fan};
use crate::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionData {
    pub curves: Vec<Vec<i64>>,
    pub self_intersections: Vec<i64>,
    pub matrix: Vec<Vec<i64>>,
    pub discrepancies: Vec<Rat>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NumericalClass {
    NumLt,
    NumLcOnly,
    Neither,
}

fn cross(a: &[i64], b: &[i64]) -> i64 {
    a[0] * b[1] - a[1] * b[0]
}

/// The Hirzebruch–Jung resolution: the Hilbert basis of `σ` in angular order.
pub fn surface_minimal_resolution(x: &AffineToricVariety) -> Result<(Fan, IntersectionData)> {
    if x.dim() != 2 {
        return Err(Error::WrongDimension { expected: 2, got: x.dim() });
    }
    let (v0, v1) = (&x.rays()[0], &x.rays()[1]);
    let s = cross(v0, v1).signum();
    let mut chain = hilbert_basis(x.cone())?;
    chain.sort_by(|a, b| 0.cmp(&(s * cross(a, b))));
    debug_assert!(chain.first() == Some(v0) && chain.last() == Some(v1));
    let curves: Vec<Vec<i64>> = chain[1..chain.len() - 1].to_vec();
    let mut rays = x.rays().to_vec();
    rays.extend(curves.iter().cloned());
    let idx = |w: &Vec<i64>| rays.iter().position(|r| r == w).expect("ray");
    let cones = chain.windows(2).map(|p| vec![idx(&p[0]), idx(&p[1])]).collect();
    let fan = Fan::from_parts(x, rays.clone(), cones)?;

    let n = curves.len();
    let mut b = Vec::with_capacity(n);
    for i in 1..=n {
        let sum = linalg::add(&chain[i - 1], &chain[i + 1]);
        let k = (0..2).find(|&k| chain[i][k] != 0).expect("nonzero ray");
        let bi = sum[k] / chain[i][k];
        if linalg::scale(&chain[i], bi) != sum {
            return Err(Error::Invalid("adjacent rays do not satisfy the chain relation".into()));
        }
        b.push(bi);
    }
    let matrix: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match i.abs_diff(j) {
                    0 => -b[i],
                    1 => 1,
                    _ => 0,
                })
                .collect()
        })
        .collect();
    let a: Vec<Vec<Rat>> = matrix.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect();
    let rhs: Vec<Rat> = b.iter().map(|&bi| int(bi - 2)).collect();
    let discrepancies = if n == 0 {
        Vec::new()
    } else {
        linalg::solve(&a, &rhs).ok_or(Error::Invalid("singular intersection matrix".into()))?
    };
    Ok((fan, IntersectionData { curves, self_intersections: b.iter().map(|v| -v).collect(), matrix, discrepancies }))
}

pub fn surface_numerical_classify(x: &AffineToricVariety) -> Result<NumericalClass> {
    let (_, data) = surface_minimal_resolution(x)?;
    let minus_one = int(-1);
    Ok(if data.discrepancies.iter().all(|a| *a > minus_one) {
        NumericalClass::NumLt
    } else if data.discrepancies.iter().all(|a| *a >= minus_one) {
        NumericalClass::NumLcOnly
    } else {
        NumericalClass::Neither
    })
}

/// `K⁻` coefficients at the exceptional curves, for comparison with the numerical ones.
pub fn toric_discrepancies(x: &AffineToricVariety, curves: &[Vec<i64>]) -> Vec<Rat> {
    let verts = level_polyhedron(x, -1).vertices();
    curves.iter().map(|w| int(-1) - support_q(&verts, w)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let x = AffineToricVariety::new(vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert!(surface_minimal_resolution(&x).unwrap().1.curves.is_empty());
        let q = AffineToricVariety::new(vec![vec![1, 0], vec![1, 2]]).unwrap();
        let (_, d) = surface_minimal_resolution(&q).unwrap();
        assert_eq!((d.self_intersections, d.discrepancies), (vec![-2], vec![int(0)]));
        let a4 = AffineToricVariety::new(vec![vec![1, 0], vec![1, 5]]).unwrap();
        let (f, d) = surface_minimal_resolution(&a4).unwrap();
        assert!(f.is_smooth());
        assert_eq!(d.self_intersections, vec![-2; 4]);
        assert_eq!(d.discrepancies, vec![int(0); 4]);
        assert_eq!(surface_numerical_classify(&a4).unwrap(), NumericalClass::NumLt);
        let e = AffineToricVariety::new(vec![vec![1, 0], vec![2, 5]]).unwrap();
        let (_, d) = surface_minimal_resolution(&e).unwrap();
        assert_eq!(toric_discrepancies(&e, &d.curves), d.discrepancies);
    }
}
