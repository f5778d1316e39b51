use crate::divisors::relcan::level_polyhedron;
use crate::divisors::{is_qcartier, section_polyhedron};
use crate::error::Result;
use crate::mult::thresholds::{linearity_fan, minus_lp_minus};
use crate::mult::{PairSpec, TermBody};
use crate::ratgeom::cone::hilbert_basis;
use crate::ratgeom::linalg::{add, primitive};
use crate::ratgeom::polyhedron::support_q;
use crate::ratgeom::rational::int;
use crate::toric::Fan;
use crate::Rat;
use num_traits::{Signed, Zero};
use std::collections::BTreeSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LogLevel {
    LogTerminal,
    StrictlyLogCanonical,
    NotLogCanonical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CanLevel {
    Terminal,
    Canonical,
    Neither,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WitnessKind {
    /// `−LP₋(w) − Z(w)`, the limiting log discrepancy at `m*`.
    Log,
    /// `LP₊(w) − Z(w)`, the log discrepancy.
    Canonical,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub kind: WitnessKind,
    pub w: Vec<i64>,
    pub value: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Classification {
    pub log_level: Option<LogLevel>,
    pub can_level: Option<CanLevel>,
    pub witnesses: Vec<Witness>,
}

/// `h(w) = −LP₋(w) − Z(w)` on the rays of the linearity fan of `(X, Z)`.
pub(crate) fn log_profile(p: &PairSpec) -> Result<(Fan, Vec<Rat>)> {
    let verts = level_polyhedron(p.variety(), -1).vertices();
    let f = linearity_fan(p, &[])?;
    let h = f.rays().iter().map(|w| minus_lp_minus(&verts, w) - p.z_val(w)).collect();
    Ok((f, h))
}

pub fn classify_log(p: &PairSpec) -> Result<Classification> {
    let (f, h) = log_profile(p)?;
    let (k, min) = h.iter().enumerate().min_by(|a, b| a.1.cmp(b.1)).expect("fan has rays");
    let level = if min.is_positive() {
        LogLevel::LogTerminal
    } else if min.is_zero() {
        LogLevel::StrictlyLogCanonical
    } else {
        LogLevel::NotLogCanonical
    };
    let witnesses = match level {
        LogLevel::StrictlyLogCanonical => h
            .iter()
            .enumerate()
            .filter(|(_, v)| v.is_zero())
            .map(|(i, v)| Witness { kind: WitnessKind::Log, w: f.rays()[i].clone(), value: v.clone() })
            .collect(),
        _ => vec![Witness { kind: WitnessKind::Log, w: f.rays()[k].clone(), value: min.clone() }],
    };
    Ok(Classification { log_level: Some(level), can_level: None, witnesses })
}

/// `g(w) = LP₊(w) − Z(w)` with ℚ-Cartier divisor bodies pulled back linearly.
pub(crate) struct CanProfile {
    pub fan: Fan,
    verts: Vec<Vec<Rat>>,
}

impl CanProfile {
    pub fn new(p: &PairSpec) -> Result<Self> {
        let verts = level_polyhedron(p.variety(), 1).vertices();
        let mut extra = vec![verts.clone()];
        for t in p.terms() {
            if let TermBody::Divisor(d) = &t.body {
                if is_qcartier(d).is_none() {
                    extra.push(section_polyhedron(d).vertices());
                }
            }
        }
        Ok(CanProfile { fan: linearity_fan(p, &extra)?, verts })
    }

    pub fn g(&self, p: &PairSpec, w: &[i64]) -> Result<Rat> {
        Ok(support_q(&self.verts, w) - p.z_val_pullback(w)?)
    }

    /// `HB(τ)` for every cone of the linearity fan.
    pub fn hilbert_bases(&self) -> Result<Vec<Vec<Vec<i64>>>> {
        (0..self.fan.cones().len()).map(|c| hilbert_basis(&self.fan.cone(c))).collect()
    }

    /// The union over cones of `C(τ)`.
    pub fn candidates(&self, hbs: &[Vec<Vec<i64>>]) -> Result<Vec<Vec<i64>>> {
        let x = self.fan.base();
        let is_ray = |w: &Vec<i64>| x.rays().contains(w);
        let mut out = BTreeSet::new();
        for (c, hb) in hbs.iter().enumerate() {
            let srays: Vec<&Vec<i64>> = self.fan.cones()[c]
                .iter()
                .filter(|&&i| self.fan.is_base_ray(i))
                .map(|&i| &self.fan.rays()[i])
                .collect();
            let inner: Vec<&Vec<i64>> = hb.iter().filter(|b| !is_ray(b)).collect();
            for b in &inner {
                out.insert((*b).clone());
            }
            for (a, vi) in srays.iter().enumerate() {
                for vj in &srays[a + 1..] {
                    out.insert(primitive(&add(vi, vj))?);
                }
                for b in &inner {
                    out.insert(primitive(&add(vi, b))?);
                }
            }
        }
        Ok(out.into_iter().filter(|w| !is_ray(w)).collect())
    }
}

pub fn classify_can(p: &PairSpec) -> Result<Classification> {
    let prof = CanProfile::new(p)?;
    let hbs = prof.hilbert_bases()?;
    for hb in &hbs {
        for b in hb {
            let g = prof.g(p, b)?;
            if g.is_negative() {
                let w = Witness { kind: WitnessKind::Canonical, w: b.clone(), value: g };
                return Ok(Classification { log_level: None, can_level: Some(CanLevel::Neither), witnesses: vec![w] });
            }
        }
    }
    let mut best: Option<(Rat, Vec<i64>)> = None;
    for w in prof.candidates(&hbs)? {
        let g = prof.g(p, &w)?;
        if best.as_ref().is_none_or(|(b, _)| g < *b) {
            best = Some((g, w));
        }
    }
    let Some((g, w)) = best else {
        return Ok(Classification { log_level: None, can_level: Some(CanLevel::Terminal), witnesses: vec![] });
    };
    let level = if g > int(1) {
        CanLevel::Terminal
    } else if g == int(1) {
        CanLevel::Canonical
    } else {
        CanLevel::Neither
    };
    let witnesses = vec![Witness { kind: WitnessKind::Canonical, w, value: g }];
    Ok(Classification { log_level: None, can_level: Some(level), witnesses })
}

/// Both ladders.
pub fn classify(p: &PairSpec) -> Result<Classification> {
    let mut a = classify_log(p)?;
    let b = classify_can(p)?;
    a.can_level = b.can_level;
    a.witnesses.extend(b.witnesses);
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divisors::TWeilDivisor;
    use crate::ratgeom::rational::frac;
    use crate::toric::AffineToricVariety;

    fn var(rays: &[&[i64]]) -> AffineToricVariety {
        AffineToricVariety::new(rays.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn log_ladder() {
        let x = var(&[&[1, 0], &[0, 1]]);
        let half = PairSpec::ideal(&x, frac(1, 2), vec![vec![1, 0]]).unwrap();
        assert_eq!(classify_log(&half).unwrap().log_level, Some(LogLevel::LogTerminal));
        let line = PairSpec::ideal(&x, int(1), vec![vec![1, 0]]).unwrap();
        let c = classify_log(&line).unwrap();
        assert_eq!(c.log_level, Some(LogLevel::StrictlyLogCanonical));
        assert_eq!(c.witnesses[0].w, vec![1, 0]);
        let q = var(&[&[1, 0], &[1, 2]]);
        let c = classify_log(&PairSpec::trivial(&q)).unwrap();
        assert_eq!(c.log_level, Some(LogLevel::LogTerminal));
    }

    #[test]
    fn can_ladder() {
        let x = var(&[&[1, 0], &[0, 1]]);
        assert_eq!(classify_can(&PairSpec::trivial(&x)).unwrap().can_level, Some(CanLevel::Terminal));
        let q = var(&[&[1, 0], &[1, 2]]);
        let c = classify_can(&PairSpec::trivial(&q)).unwrap();
        assert_eq!(c.can_level, Some(CanLevel::Canonical));
        assert_eq!(c.witnesses[0].w, vec![1, 1]);
        assert_eq!(c.witnesses[0].value, int(1));
        let l = PairSpec::divisor(&q, int(1), TWeilDivisor::prime(&q, 0)).unwrap();
        let c = classify_can(&l).unwrap();
        assert_eq!(c.can_level, Some(CanLevel::Neither));
        assert_eq!(c.witnesses[0].value, frac(1, 2));
    }
}
