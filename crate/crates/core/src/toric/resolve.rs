//! Toric resolutions by repeated stellar subdivision.

use crate::error::Result;
use crate::ratgeom::cone::hilbert_basis;
use crate::ratgeom::HPolyhedron;
use crate::toric::fan::{common_refinement, lattice_points, normal_fan_of_points};
use crate::toric::{AffineToricVariety, Fan};

/// Tie-breaking direction for pivot choices during resolution.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PivotOrder {
    #[default]
    Forward,
    Reverse,
}

pub fn resolve(fan: &Fan) -> Fan {
    resolve_with(fan, PivotOrder::Forward)
}

fn max_multiplicity(f: &Fan) -> u64 {
    (0..f.cones().len()).map(|c| f.multiplicity(c).expect("simplicial")).max().unwrap_or(1)
}

/// Smooth refinement by subdividing a maximal-multiplicity cone at a non-ray Hilbert-basis
/// element. `Forward` takes the first such cone and the element minimizing the resulting
/// maximal multiplicity; `Reverse` takes the last cone and the greatest element.
pub fn resolve_with(fan: &Fan, order: PivotOrder) -> Fan {
    let mut f = fan.triangulated();
    loop {
        let mults: Vec<u64> = (0..f.cones().len()).map(|c| f.multiplicity(c).expect("simplicial")).collect();
        let top = *mults.iter().max().unwrap_or(&1);
        if top <= 1 {
            return f;
        }
        let mut worst: Vec<(Vec<Vec<i64>>, usize)> = (0..f.cones().len())
            .filter(|&c| mults[c] == top)
            .map(|c| {
                let mut rs = f.cone_rays(c);
                rs.sort();
                (rs, c)
            })
            .collect();
        worst.sort();
        let c = match order {
            PivotOrder::Forward => worst[0].1,
            PivotOrder::Reverse => worst[worst.len() - 1].1,
        };
        let rays = f.cone_rays(c);
        let cand: Vec<Vec<i64>> =
            hilbert_basis(&f.cone(c)).expect("pointed").into_iter().filter(|h| !rays.contains(h)).collect();
        f = match order {
            PivotOrder::Forward => {
                let mut scored: Vec<(u64, Vec<i64>, Fan)> = cand
                    .into_iter()
                    .map(|h| {
                        let g = f.stellar(&h).expect("inside σ");
                        (max_multiplicity(&g), h, g)
                    })
                    .collect();
                scored.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
                scored.swap_remove(0).2
            }
            PivotOrder::Reverse => {
                f.stellar(cand.iter().max().expect("a non-ray Hilbert basis element")).expect("inside σ")
            }
        };
    }
}

/// Fans on whose cones the given ideals and polyhedral modules are linear (locally principal).
pub fn principalizing_fans(
    x: &AffineToricVariety,
    ideals: &[Vec<Vec<i64>>],
    polys: &[HPolyhedron],
) -> Result<Vec<Fan>> {
    let mut fans = vec![Fan::trivial(x)];
    for g in ideals {
        fans.push(normal_fan_of_points(x, &lattice_points(g)));
    }
    for p in polys {
        fans.push(crate::toric::fan::normal_fan_restricted(p, x)?);
        fans.push(normal_fan_of_points(x, &lattice_points(&p.min_generators()?)));
    }
    Ok(fans)
}

/// Smooth refinement of `σ` on which every ideal and every polyhedral module is locally principal.
pub fn log_resolution(x: &AffineToricVariety, ideals: &[Vec<Vec<i64>>], polys: &[HPolyhedron]) -> Result<Fan> {
    log_resolution_with(x, ideals, polys, PivotOrder::Forward)
}

pub fn log_resolution_with(
    x: &AffineToricVariety,
    ideals: &[Vec<Vec<i64>>],
    polys: &[HPolyhedron],
    order: PivotOrder,
) -> Result<Fan> {
    let fans = principalizing_fans(x, ideals, polys)?;
    Ok(resolve_with(&common_refinement(&fans)?, order))
}

impl Fan {
    /// On every cone some generator attains the minimum pairing at all rays simultaneously.
    pub fn is_locally_principal(&self, gens: &[Vec<i64>]) -> bool {
        use crate::ratgeom::linalg::dot;
        (0..self.cones().len()).all(|c| {
            let rs = self.cone_rays(c);
            let mins: Vec<i64> = rs.iter().map(|r| gens.iter().map(|g| dot(g, r)).min().unwrap()).collect();
            gens.iter().any(|g| rs.iter().zip(&mins).all(|(r, m)| dot(g, r) == *m))
        })
    }
}
