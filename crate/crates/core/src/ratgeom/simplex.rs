//! Two-phase primal simplex over exact rationals with Bland's anti-cycling rule.
//!
//! Solves `min ⟨c,u⟩ subject to A u ≥ b` with `u` free.

use crate::error::{Error, Result};
use crate::ratgeom::rational::Rat;
use num_traits::{Signed, Zero};

struct Tableau {
    rows: Vec<Vec<Rat>>,
    rhs: Vec<Rat>,
    basis: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for x in self.rows[r].iter_mut() {
            *x *= &inv;
        }
        self.rhs[r] *= &inv;
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for j in 0..self.rows[i].len() {
                if !self.rows[r][j].is_zero() {
                    let t = &f * &self.rows[r][j];
                    self.rows[i][j] -= t;
                }
            }
            let t = &f * &self.rhs[r];
            self.rhs[i] -= t;
        }
        self.basis[r] = c;
    }

    /// Runs simplex iterations for `cost` over columns `allowed`.
    fn optimize(&mut self, cost: &[Rat], allowed: usize) -> Result<()> {
        loop {
            let mut entering = None;
            for j in 0..allowed {
                if self.basis.contains(&j) {
                    continue;
                }
                let mut r = cost[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !self.rows[i][j].is_zero() && !cost[b].is_zero() {
                        r -= &cost[b] * &self.rows[i][j];
                    }
                }
                if r.is_negative() {
                    entering = Some(j);
                    break;
                }
            }
            let Some(c) = entering else { return Ok(()) };
            let mut best: Option<(usize, Rat)> = None;
            for i in 0..self.rows.len() {
                if self.rows[i][c].is_positive() {
                    let ratio = &self.rhs[i] / &self.rows[i][c];
                    let better = match &best {
                        None => true,
                        Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                    };
                    if better {
                        best = Some((i, ratio));
                    }
                }
            }
            match best {
                None => return Err(Error::Unbounded),
                Some((r, _)) => self.pivot(r, c),
            }
        }
    }
}

/// Exact optimum and an optimal vertex of `min ⟨c,u⟩ s.t. ⟨a_i,u⟩ ≥ b_i`.
pub fn minimize(a: &[Vec<Rat>], b: &[Rat], c: &[Rat]) -> Result<(Rat, Vec<Rat>)> {
    let d = c.len();
    let m = a.len();
    // columns: p (d) | n (d) | s (m) | artificial (m)
    let width = 2 * d + 2 * m;
    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    for i in 0..m {
        let neg = b[i].is_negative();
        let sg = |x: Rat| if neg { -x } else { x };
        let mut row = vec![Rat::zero(); width];
        for j in 0..d {
            row[j] = sg(a[i][j].clone());
            row[d + j] = sg(-a[i][j].clone());
        }
        row[2 * d + i] = sg(Rat::from_integer((-1).into()));
        row[2 * d + m + i] = Rat::from_integer(1.into());
        rows.push(row);
        rhs.push(sg(b[i].clone()));
    }
    let mut t = Tableau { rows, rhs, basis: (0..m).map(|i| 2 * d + m + i).collect() };
    let mut phase1 = vec![Rat::zero(); width];
    for x in phase1.iter_mut().skip(2 * d + m) {
        *x = Rat::from_integer(1.into());
    }
    t.optimize(&phase1, width)?;
    let infeas: Rat = t.basis.iter().zip(&t.rhs).filter(|(&bv, _)| bv >= 2 * d + m).map(|(_, v)| v.clone()).sum();
    if infeas.is_positive() {
        return Err(Error::Infeasible);
    }
    // drive remaining artificials out of the basis; drop redundant rows
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= 2 * d + m {
            match (0..2 * d + m).find(|&j| !t.rows[i][j].is_zero()) {
                Some(j) => t.pivot(i, j),
                None => {
                    t.rows.remove(i);
                    t.rhs.remove(i);
                    t.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }
    let mut cost = vec![Rat::zero(); width];
    for j in 0..d {
        cost[j] = c[j].clone();
        cost[d + j] = -c[j].clone();
    }
    t.optimize(&cost, 2 * d + m)?;
    let mut x = vec![Rat::zero(); width];
    for (i, &bv) in t.basis.iter().enumerate() {
        x[bv] = t.rhs[i].clone();
    }
    let u: Vec<Rat> = (0..d).map(|j| &x[j] - &x[d + j]).collect();
    let value = u.iter().zip(c).map(|(p, q)| p * q).sum();
    Ok((value, u))
}
