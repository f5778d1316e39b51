//! Toric boundaries `Δ` and the search for `m`-compatible ones.

use crate::divisors::{limiting_relcan, log_relcan, TWeilDivisor};
use crate::error::{Error, Result};
use crate::mult::multiplier::working_resolution;
use crate::mult::{BoundarySpec, PairSpec};
use crate::ratgeom::rational::{den_i64, int, Rat};
use crate::toric::{AffineToricVariety, PivotOrder};
use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

/// Cooperative cancellation: a shared flag plus an optional deadline.
#[derive(Clone, Debug, Default)]
pub struct CancelToken {
    flag: Arc<AtomicBool>,
    deadline: Option<Instant>,
}

impl CancelToken {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_timeout(t: Duration) -> Self {
        CancelToken { flag: Arc::default(), deadline: Some(Instant::now() + t) }
    }

    pub fn cancel(&self) {
        self.flag.store(true, Ordering::SeqCst);
    }

    pub fn is_cancelled(&self) -> bool {
        self.flag.load(Ordering::SeqCst) || self.deadline.is_some_and(|d| Instant::now() >= d)
    }

    pub fn check(&self) -> Result<()> {
        if self.is_cancelled() {
            Err(Error::Cancelled)
        } else {
            Ok(())
        }
    }
}

/// `{a/q : 1 ≤ q ≤ bound, 0 ≤ a < q}` in increasing order.
pub fn coefficient_grid(bound: i64) -> Vec<Rat> {
    let mut s = BTreeSet::new();
    for q in 1..=bound.max(1) {
        for a in 0..q {
            s.insert(Rat::new(a.into(), q.into()));
        }
    }
    s.into_iter().collect()
}

/// Calls `visit` on every coefficient vector with entries in `grid`, except that rays in
/// `fixed_zero` are held at 0. Lexicographic order; stops when `visit` returns `Some`.
fn for_each_vector<T>(
    n: usize,
    grid: &[Rat],
    fixed_zero: &[usize],
    mut visit: impl FnMut(&[Rat]) -> Result<Option<T>>,
) -> Result<Option<T>> {
    let choices: Vec<Vec<Rat>> =
        (0..n).map(|i| if fixed_zero.contains(&i) { vec![int(0)] } else { grid.to_vec() }).collect();
    let mut idx = vec![0usize; n];
    let mut cur: Vec<Rat> = choices.iter().map(|c| c[0].clone()).collect();
    loop {
        if let Some(t) = visit(&cur)? {
            return Ok(Some(t));
        }
        let mut k = n;
        loop {
            if k == 0 {
                return Ok(None);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                cur[k] = choices[k][idx[k]].clone();
                break;
            }
            idx[k] = 0;
            cur[k] = choices[k][0].clone();
        }
    }
}

/// All `Δ` with coefficients in `coefficient_grid(bound)` (so `⌊Δ⌋ = 0`), vanishing on
/// `excluded`, with `K_X + Δ` ℚ-Cartier.
pub fn enumerate_boundaries(x: &AffineToricVariety, bound: i64, excluded: &[usize]) -> Vec<BoundarySpec> {
    let grid = coefficient_grid(bound);
    let mut out = Vec::new();
    let _ = for_each_vector::<()>(x.n_rays(), &grid, excluded, |c| {
        let d = TWeilDivisor::on(x, c.to_vec())?;
        if let Ok(b) = BoundarySpec::new(x, d) {
            out.push(b);
        }
        Ok(None)
    });
    out
}

/// The lexicographically least `Δ` with coefficients `j/m` of reduced denominator at most
/// `bound`, `⌊Δ⌋ = 0`, no common component with `Z`, and `K^Δ_{Y/X} = K_{m,Y/X}` on the
/// working resolution of `(X, Z)` at level `m`.
pub fn compatible_boundary_search(
    p: &PairSpec,
    m: i64,
    bound: i64,
    token: &CancelToken,
) -> Result<Option<BoundarySpec>> {
    if m < 1 {
        return Err(Error::Invalid(format!("m = {m} must be positive")));
    }
    let x = p.variety();
    let grid: Vec<Rat> = (0..m).map(|j| Rat::new(j.into(), m.into())).filter(|r| den_i64(r) <= bound).collect();
    let f = working_resolution(p, m, PivotOrder::Forward)?;
    let target = limiting_relcan(&f, m)?;
    let excluded = p.support_rays();
    for_each_vector(x.n_rays(), &grid, &excluded, |c| {
        token.check()?;
        let d = TWeilDivisor::on(x, c.to_vec())?;
        let Ok(b) = BoundarySpec::new(x, d) else {
            return Ok(None);
        };
        Ok((log_relcan(&f, &b.delta)? == target).then_some(b))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratgeom::rational::frac;

    #[test]
    fn grid_and_quadric() {
        assert_eq!(coefficient_grid(2), vec![int(0), frac(1, 2)]);
        let x = AffineToricVariety::new(vec![vec![1, 0], vec![1, 2]]).unwrap();
        assert_eq!(enumerate_boundaries(&x, 2, &[]).len(), 4);
        let b = compatible_boundary_search(&PairSpec::trivial(&x), 2, 2, &CancelToken::new()).unwrap().unwrap();
        assert_eq!(b.delta.coeffs(), &[int(0), int(0)]);
        let t = CancelToken::new();
        t.cancel();
        assert_eq!(compatible_boundary_search(&PairSpec::trivial(&x), 2, 2, &t), Err(Error::Cancelled));
    }
}
