use crate::error::{Error, Result};
use crate::mult::PairSpec;
use crate::ratgeom::linalg::{add, subsets};
use crate::sing::classify::log_profile;
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;

/// The orbit closure `V(τ)` of a face `τ ≼ σ` (base ray indices) that is the center of a
/// valuation with vanishing `h`; `locus` spans a cone on which `h ≡ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcCenter {
    pub face: Vec<usize>,
    pub locus: Vec<Vec<i64>>,
    pub minimal: bool,
}

pub fn lc_centers(p: &PairSpec) -> Result<Vec<LcCenter>> {
    let (f, h) = log_profile(p)?;
    if h.iter().any(Signed::is_negative) || !h.iter().any(Zero::is_zero) {
        return Err(Error::NotStrictlyLc);
    }
    let sigma = p.variety().cone();
    let mut found: BTreeMap<Vec<usize>, Vec<Vec<i64>>> = BTreeMap::new();
    for c in f.cones() {
        let zero: Vec<usize> = c.iter().copied().filter(|&i| h[i].is_zero()).collect();
        for k in 1..=zero.len() {
            for s in subsets(zero.len(), k) {
                let rays: Vec<Vec<i64>> = s.iter().map(|&j| f.rays()[zero[j]].clone()).collect();
                let w = rays.iter().skip(1).fold(rays[0].clone(), |a, b| add(&a, b));
                found.entry(sigma.face_containing(&w)).or_insert(rays);
            }
        }
    }
    let faces: Vec<Vec<usize>> = found.keys().cloned().collect();
    Ok(found
        .into_iter()
        .map(|(face, locus)| {
            let minimal = !faces.iter().any(|g| g.len() > face.len() && face.iter().all(|i| g.contains(i)));
            LcCenter { face, locus, minimal }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratgeom::rational::int;
    use crate::toric::AffineToricVariety;

    #[test]
    fn centers() {
        let x = AffineToricVariety::new(vec![vec![1, 0], vec![0, 1]]).unwrap();
        let line = PairSpec::ideal(&x, int(1), vec![vec![1, 0]]).unwrap();
        let c = lc_centers(&line).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].face, vec![0]);
        let origin = PairSpec::ideal(&x, int(2), vec![vec![1, 0], vec![0, 1]]).unwrap();
        let c = lc_centers(&origin).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].face, vec![0, 1]);
        assert_eq!(c[0].locus, vec![vec![1, 1]]);
        let q = AffineToricVariety::new(vec![vec![1, 0], vec![1, 2]]).unwrap();
        let m = PairSpec::ideal(&q, int(1), vec![vec![0, 1], vec![1, 0], vec![2, -1]]).unwrap();
        let c = lc_centers(&m).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!((c[0].face.clone(), c[0].minimal), (vec![0, 1], true));
        assert_eq!(lc_centers(&PairSpec::trivial(&x)), Err(Error::NotStrictlyLc));
    }
}
