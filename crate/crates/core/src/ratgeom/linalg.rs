//! Integer and rational linear algebra for small dense matrices.

use crate::error::{Error, Result};
use crate::ratgeom::rational::{int, Rat};
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    let s: i128 = a.iter().zip(b).map(|(&x, &y)| x as i128 * y as i128).sum();
    i64::try_from(s).expect("pairing overflow")
}

pub fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[i64], k: i64) -> Vec<i64> {
    a.iter().map(|x| x * k).collect()
}

pub fn gcd_all(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &x| g.gcd(&x))
}

/// `v / gcd(v)`.
pub fn primitive(v: &[i64]) -> Result<Vec<i64>> {
    let g = gcd_all(v);
    if g == 0 {
        return Err(Error::ZeroVector);
    }
    Ok(v.iter().map(|x| x / g).collect())
}

/// Determinant of a square integer matrix (fraction-free Bareiss).
pub fn det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

fn to_q(rows: &[Vec<i64>]) -> Vec<Vec<Rat>> {
    rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
}

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref(a: &mut [Vec<Rat>]) -> Vec<usize> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        let pivot = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut a = to_q(rows);
    rref(&mut a).len()
}

/// Some solution of `A x = b` (free variables set to zero), or `None` if inconsistent.
pub fn solve(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = if a.is_empty() { 0 } else { a[0].len() };
    let mut aug: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut r = r.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&n) {
        return None;
    }
    let mut x = vec![Rat::zero(); n];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = aug[i][n].clone();
    }
    Some(x)
}

/// Rational basis of the null space `{x : A x = 0}`.
pub fn kernel(a: &[Vec<Rat>], n: usize) -> Vec<Vec<Rat>> {
    let mut m = a.to_vec();
    let pivots = rref(&mut m);
    let mut out = Vec::new();
    for f in (0..n).filter(|c| !pivots.contains(c)) {
        let mut x = vec![Rat::zero(); n];
        x[f] = int(1);
        for (i, &c) in pivots.iter().enumerate() {
            x[c] = -m[i][f].clone();
        }
        out.push(x);
    }
    out
}

/// Primitive integer generator of a one-dimensional kernel, if the kernel has dimension one.
pub fn kernel_line(rows: &[Vec<i64>], n: usize) -> Option<Vec<i64>> {
    let k = kernel(&to_q(rows), n);
    if k.len() != 1 {
        return None;
    }
    let (v, _) = crate::ratgeom::rational::clear_denominators(&k[0]);
    primitive(&v).ok()
}

/// Lattice basis of `{x ∈ ℤ^n : rows·x = 0}` via unimodular column operations.
pub fn integer_kernel(rows: &[Vec<i64>], n: usize) -> Vec<Vec<i64>> {
    let m = rows.len();
    let mut a: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut u: Vec<Vec<i128>> = (0..n).map(|i| (0..n).map(|j| (i == j) as i128).collect()).collect();
    // columns are a[.][c] and u[.][c]
    let mut p = 0;
    for r in 0..m {
        if p == n {
            break;
        }
        loop {
            let nz: Vec<usize> = (p..n).filter(|&c| a[r][c] != 0).collect();
            if nz.is_empty() {
                break;
            }
            let c0 = *nz.iter().min_by_key(|&&c| a[r][c].abs()).unwrap();
            swap_cols(&mut a, &mut u, p, c0);
            let mut done = true;
            for c in p + 1..n {
                if a[r][c] != 0 {
                    let q = Integer::div_floor(&a[r][c], &a[r][p]);
                    col_axpy(&mut a, &mut u, c, p, -q);
                    if a[r][c] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                p += 1;
                break;
            }
        }
    }
    (p..n)
        .map(|c| {
            let v: Vec<i64> = (0..n).map(|i| i64::try_from(u[i][c]).expect("kernel overflow")).collect();
            v
        })
        .collect()
}

fn swap_cols(a: &mut [Vec<i128>], u: &mut [Vec<i128>], i: usize, j: usize) {
    if i == j {
        return;
    }
    for row in a.iter_mut() {
        row.swap(i, j);
    }
    for row in u.iter_mut() {
        row.swap(i, j);
    }
}

/// column `dst += k · column src`
fn col_axpy(a: &mut [Vec<i128>], u: &mut [Vec<i128>], dst: usize, src: usize, k: i128) {
    for row in a.iter_mut() {
        row[dst] += k * row[src];
    }
    for row in u.iter_mut() {
        row[dst] += k * row[src];
    }
}

/// Coordinates of `x` in the (linearly independent) basis `basis`, if `x` lies in its rational span.
pub fn coords(basis: &[Vec<i64>], x: &[i64]) -> Option<Vec<Rat>> {
    let n = x.len();
    let k = basis.len();
    let a: Vec<Vec<Rat>> = (0..n).map(|i| (0..k).map(|j| int(basis[j][i])).collect()).collect();
    let b: Vec<Rat> = x.iter().map(|&v| int(v)).collect();
    solve(&a, &b)
}

/// gcd of all maximal minors of a `k × n` integer matrix of rank `k`.
pub fn maximal_minor_gcd(rows: &[Vec<i64>]) -> i128 {
    let k = rows.len();
    if k == 0 {
        return 1;
    }
    let n = rows[0].len();
    let mut g: i128 = 0;
    for cols in subsets(n, k) {
        let sub: Vec<Vec<i64>> = rows.iter().map(|r| cols.iter().map(|&c| r[c]).collect()).collect();
        g = g.gcd(&det(&sub));
    }
    g.abs()
}

/// All `k`-subsets of `0..n`, lexicographically.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

pub fn is_zero(v: &[i64]) -> bool {
    v.iter().all(|&x| x == 0)
}

pub fn abs_max(v: &[i64]) -> i64 {
    v.iter().map(|x| x.abs()).max().unwrap_or(0)
}

pub fn rat_is_nonneg(r: &Rat) -> bool {
    !r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinants() {
        assert_eq!(det(&[vec![1, 0], vec![1, 2]]), 2);
        assert_eq!(det(&[vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 2]]), 2);
        assert_eq!(det(&[vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(det(&[vec![2, 4], vec![1, 2]]), 0);
    }

    #[test]
    fn subset_enumeration() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(subsets(3, 3), vec![vec![0, 1, 2]]);
        assert!(subsets(2, 3).is_empty());
    }

    #[test]
    fn integer_kernels() {
        let k = integer_kernel(&[vec![2, 3, 5]], 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert_eq!(dot(v, &[2, 3, 5]), 0);
        }
        // unimodular: kernel basis together with a preimage spans ℤ³ iff the 2×2 minors are coprime
        assert_eq!(maximal_minor_gcd(&k), 1);
        let k = integer_kernel(&[vec![1, 1, 2]], 3);
        assert_eq!(maximal_minor_gcd(&k), 1);
    }

    #[test]
    fn primitive_parts() {
        assert_eq!(primitive(&[2, 2]).unwrap(), vec![1, 1]);
        assert_eq!(primitive(&[0, -4, 6]).unwrap(), vec![0, -2, 3]);
        assert_eq!(primitive(&[0, 0]), Err(Error::ZeroVector));
    }
}
