//! Log canonical thresholds and jumping numbers.

use crate::divisors::relcan::level_polyhedron;
use crate::divisors::MonomialIdeal;
use crate::error::{Error, Result};
use crate::mult::multiplier::{pushforward_ceiling, stabilization_certificate, working_resolution};
use crate::mult::PairSpec;
use crate::ratgeom::polyhedron::support_q;
use crate::ratgeom::rational::{ceil_i64, den_i64, int, Rat};
use crate::toric::fan::{lattice_points, normal_fan_of_points};
use crate::toric::{common_refinement, Fan, PivotOrder};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Threshold {
    Finite(Rat),
    Infinity,
}

/// Fan on whose cones `w ↦ lp_min(P₁, w)` and `w ↦ Z(w)` are linear (not necessarily smooth).
pub fn linearity_fan(p: &PairSpec, extra: &[Vec<Vec<Rat>>]) -> Result<Fan> {
    let x = p.variety();
    let mut fans = vec![normal_fan_of_points(x, &level_polyhedron(x, -1).vertices())];
    for g in p.ideal_gens() {
        fans.push(normal_fan_of_points(x, &lattice_points(&g)));
    }
    for pts in extra {
        fans.push(normal_fan_of_points(x, pts));
    }
    common_refinement(&fans)
}

/// `−lp_min(P₁, w) = A(w) + 1`, with `A` the `K⁻_{Y/X}` coefficient.
pub fn minus_lp_minus(verts: &[Vec<Rat>], w: &[i64]) -> Rat {
    -support_q(verts, w)
}

/// `lct(X,Z)`: the minimum over rays of the linearity fan of `(A(w)+1)/Z(w)`.
pub fn lct(p: &PairSpec) -> Result<Threshold> {
    let x = p.variety();
    let verts = level_polyhedron(x, -1).vertices();
    let f = linearity_fan(p, &[])?;
    if f.rays().iter().any(|w| !minus_lp_minus(&verts, w).is_positive()) {
        return Err(Error::NotLogTerminal);
    }
    let best = f
        .rays()
        .iter()
        .filter_map(|w| {
            let z = p.z_val(w);
            z.is_positive().then(|| minus_lp_minus(&verts, w) / z)
        })
        .min();
    Ok(best.map_or(Threshold::Infinity, Threshold::Finite))
}

/// Caches `J(X, tZ)` on a fixed stabilized resolution, keyed by the ray bounds.
pub struct JumpEvaluator<'a> {
    pair: &'a PairSpec,
    fan: Fan,
    a: Vec<Rat>,
    z: Vec<Rat>,
    cache: BTreeMap<Vec<i64>, MonomialIdeal>,
}

impl<'a> JumpEvaluator<'a> {
    pub fn new(pair: &'a PairSpec) -> Result<Self> {
        let m = stabilization_certificate(pair.variety()).m_star;
        let fan = working_resolution(pair, m, PivotOrder::Forward)?;
        let verts = level_polyhedron(pair.variety(), -1).vertices();
        let a = fan.rays().iter().map(|w| minus_lp_minus(&verts, w) - int(1)).collect();
        let z = fan.rays().iter().map(|w| pair.z_val(w)).collect();
        Ok(JumpEvaluator { pair, fan, a, z, cache: BTreeMap::new() })
    }

    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn pair(&self) -> &PairSpec {
        self.pair
    }

    /// `(A(w), Z(w))` per ray of the resolution.
    pub fn ray_data(&self) -> impl Iterator<Item = (&Vec<i64>, &Rat, &Rat)> {
        self.fan.rays().iter().zip(&self.a).zip(&self.z).map(|((w, a), z)| (w, a, z))
    }

    /// `J(X, tZ)` without touching the cache.
    pub fn ideal_uncached(&self, t: &Rat) -> Result<MonomialIdeal> {
        let coeffs: Vec<Rat> = self.a.iter().zip(&self.z).map(|(a, z)| a - t * z).collect();
        pushforward_ceiling(&self.fan, &coeffs)
    }

    pub fn ideal_at(&mut self, t: &Rat) -> Result<MonomialIdeal> {
        let coeffs: Vec<Rat> = self.a.iter().zip(&self.z).map(|(a, z)| a - t * z).collect();
        let key: Vec<i64> = coeffs.iter().map(|c| -ceil_i64(c)).collect();
        if let Some(j) = self.cache.get(&key) {
            return Ok(j.clone());
        }
        let j = pushforward_ceiling(&self.fan, &coeffs)?;
        self.cache.insert(key, j.clone());
        Ok(j)
    }

    /// Candidates `(A(w)+1+j)/Z(w)` in `(0, t_max]`.
    pub fn candidates(&self, t_max: &Rat) -> Vec<Rat> {
        let mut out = BTreeSet::new();
        for (a, z) in self.a.iter().zip(&self.z) {
            if !z.is_positive() {
                continue;
            }
            let mut j = 0i64;
            loop {
                let t = (a + int(1 + j)) / z;
                if t > *t_max {
                    break;
                }
                if t.is_positive() {
                    out.insert(t);
                }
                j += 1;
            }
        }
        out.into_iter().collect()
    }
}

fn probe_step(cands: &[Rat]) -> Rat {
    let l = cands.iter().fold(1i64, |acc, t| acc.lcm(&den_i64(t)));
    Rat::new(1.into(), (2 * l).into())
}

fn before(t: &Rat, eps: &Rat) -> Rat {
    let b = t - eps;
    if b.is_positive() {
        b
    } else {
        Rat::zero()
    }
}

/// All `t ∈ (0, t_max]` at which `J(X, tZ)` strictly drops.
pub fn jumping_numbers(p: &PairSpec, t_max: &Rat) -> Result<Vec<Rat>> {
    if !t_max.is_positive() {
        return Err(Error::Invalid("t_max must be positive".into()));
    }
    let mut ev = JumpEvaluator::new(p)?;
    let cands = ev.candidates(t_max);
    let eps = probe_step(&cands);
    let mut out = Vec::new();
    for t in cands {
        if ev.ideal_at(&before(&t, &eps))? != ev.ideal_at(&t)? {
            out.push(t);
        }
    }
    Ok(out)
}

/// [`jumping_numbers`] with the candidate checks spread over `threads` workers.
pub fn jumping_numbers_with(p: &PairSpec, t_max: &Rat, threads: usize) -> Result<Vec<Rat>> {
    if threads <= 1 {
        return jumping_numbers(p, t_max);
    }
    if !t_max.is_positive() {
        return Err(Error::Invalid("t_max must be positive".into()));
    }
    let ev = JumpEvaluator::new(p)?;
    let cands = ev.candidates(t_max);
    let eps = probe_step(&cands);
    let chunk = cands.len().div_ceil(threads).max(1);
    let flags: Vec<Result<Vec<bool>>> = std::thread::scope(|s| {
        let handles: Vec<_> = cands
            .chunks(chunk)
            .map(|c| {
                let (ev, eps) = (&ev, &eps);
                s.spawn(move || {
                    c.iter()
                        .map(|t| Ok(ev.ideal_uncached(&before(t, eps))? != ev.ideal_uncached(t)?))
                        .collect::<Result<Vec<bool>>>()
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut out = Vec::new();
    let mut it = cands.into_iter();
    for f in flags {
        for jump in f? {
            let t = it.next().expect("one flag per candidate");
            if jump {
                out.push(t);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratgeom::rational::frac;
    use crate::toric::AffineToricVariety;

    fn var(rays: &[&[i64]]) -> AffineToricVariety {
        AffineToricVariety::new(rays.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn thresholds() {
        let x = var(&[&[1, 0], &[0, 1]]);
        let cusp = PairSpec::ideal(&x, int(1), vec![vec![2, 0], vec![0, 3]]).unwrap();
        assert_eq!(lct(&cusp).unwrap(), Threshold::Finite(frac(5, 6)));
        let line = PairSpec::ideal(&x, int(1), vec![vec![1, 0]]).unwrap();
        assert_eq!(lct(&line).unwrap(), Threshold::Finite(int(1)));
        assert_eq!(jumping_numbers(&line, &int(2)).unwrap(), vec![int(1), int(2)]);
        assert_eq!(jumping_numbers_with(&line, &int(2), 3).unwrap(), vec![int(1), int(2)]);
        assert_eq!(lct(&PairSpec::trivial(&x)).unwrap(), Threshold::Infinity);
        let q = var(&[&[1, 0], &[1, 2]]);
        let m = PairSpec::ideal(&q, int(1), vec![vec![0, 1], vec![1, 0], vec![2, -1]]).unwrap();
        assert_eq!(lct(&m).unwrap(), Threshold::Finite(int(1)));
    }

    #[test]
    fn cusp_jumping_numbers() {
        let x = var(&[&[1, 0], &[0, 1]]);
        let cusp = PairSpec::ideal(&x, int(1), vec![vec![2, 0], vec![0, 3]]).unwrap();
        assert_eq!(jumping_numbers(&cusp, &int(1)).unwrap(), vec![frac(5, 6)]);
        let mut ev = JumpEvaluator::new(&cusp).unwrap();
        assert_eq!(ev.ideal_at(&frac(9, 10)).unwrap(), ev.ideal_at(&int(1)).unwrap());
    }
}
