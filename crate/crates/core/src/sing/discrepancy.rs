use crate::divisors::relcan::level_polyhedron;
use crate::error::{Error, Result};
use crate::mult::PairSpec;
use crate::ratgeom::polyhedron::support_q;
use crate::toric::DivisorialValuation;
use crate::Rat;

/// `a_{m,w}(X,Z) = ord_w(K_{m,Y/X}) + 1 − val_w(Z) = −ilp(m·P₁, w)/m − Z(w)`.
pub fn limiting_log_discrepancy(p: &PairSpec, v: &DivisorialValuation, m: i64) -> Result<Rat> {
    if m < 1 {
        return Err(Error::Invalid(format!("m = {m} must be positive")));
    }
    let (best, _) = level_polyhedron(p.variety(), -1).scaled(m).ilp_min(&v.w)?;
    Ok(-best / Rat::from_integer(m.into()) - p.z_val(&v.w))
}

/// `a_w(X,Z) = ord_w(K_{Y/X}) + 1 − val_w(Z) = LP₊(w) − Z(w)`, with ℚ-Cartier divisor bodies
/// pulled back linearly.
pub fn log_discrepancy(p: &PairSpec, v: &DivisorialValuation) -> Result<Rat> {
    let verts = level_polyhedron(p.variety(), 1).vertices();
    Ok(support_q(&verts, &v.w) - p.z_val_pullback(&v.w)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratgeom::rational::int;
    use crate::toric::AffineToricVariety;

    #[test]
    fn examples() {
        let plane = AffineToricVariety::new(vec![vec![1, 0], vec![0, 1]]).unwrap();
        let w = |x: &AffineToricVariety, v: &[i64]| DivisorialValuation::of(x, v.to_vec()).unwrap();
        for m in 1..4 {
            assert_eq!(limiting_log_discrepancy(&PairSpec::trivial(&plane), &w(&plane, &[1, 1]), m).unwrap(), int(2));
        }
        let q = AffineToricVariety::new(vec![vec![1, 0], vec![1, 2]]).unwrap();
        assert_eq!(limiting_log_discrepancy(&PairSpec::trivial(&q), &w(&q, &[1, 1]), 2).unwrap(), int(1));
        let mx = PairSpec::ideal(&q, int(1), vec![vec![0, 1], vec![1, 0], vec![2, -1]]).unwrap();
        assert_eq!(limiting_log_discrepancy(&mx, &w(&q, &[1, 1]), 2).unwrap(), int(0));
        assert_eq!(log_discrepancy(&PairSpec::trivial(&plane), &w(&plane, &[1, 1])).unwrap(), int(2));
        assert_eq!(log_discrepancy(&PairSpec::trivial(&q), &w(&q, &[1, 1])).unwrap(), int(1));
        let c = AffineToricVariety::new(vec![vec![0, 0, 1], vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 1]]).unwrap();
        assert_eq!(log_discrepancy(&PairSpec::trivial(&c), &w(&c, &[1, 1, 2])).unwrap(), int(2));
    }
}
