//! Exact linear algebra over the rationals.
//!
//! Matrices are row-major `Vec<Vec<Q>>`; all sizes in this crate are tiny
//! (rank at most a handful), so plain Gaussian elimination is used throughout.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::num::{primitive, q, Q};

pub type Matrix = Vec<Vec<Q>>;

pub fn from_int_rows(rows: &[Vec<i64>]) -> Matrix {
    rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
}

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
        .collect()
}

pub fn transpose(m: &Matrix) -> Matrix {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len()).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(Q::zero(), |acc, k| acc + &row[k] * &b[k][j]))
                .collect()
        })
        .collect()
}

pub fn mat_vec(a: &Matrix, v: &[Q]) -> Vec<Q> {
    a.iter()
        .map(|row| row.iter().zip(v).fold(Q::zero(), |acc, (x, y)| acc + x * y))
        .collect()
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

/// Reduced row echelon form; returns the reduced matrix and its pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
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
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let t = &a[r][j] * &f;
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).1.len()
}

/// Basis of `{x : m x = 0}` for a matrix with `cols` columns.
pub fn nullspace(m: &Matrix, cols: usize) -> Vec<Vec<Q>> {
    if m.is_empty() {
        return identity(cols);
    }
    let (r, pivots) = rref(m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); cols];
            v[f] = Q::one();
            for (row, &p) in r.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Solves `m x = b`; returns one solution (free variables set to zero) or `None`.
pub fn solve(m: &Matrix, b: &[Q]) -> Option<Vec<Q>> {
    let cols = m.first().map_or(0, |r| r.len());
    let aug: Matrix = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (r, pivots) = rref(&aug);
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![Q::zero(); cols];
    for (row, &p) in r.iter().zip(&pivots) {
        x[p] = row[cols].clone();
    }
    Some(x)
}

pub fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let aug: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(r.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn determinant(m: &Matrix) -> Q {
    let n = m.len();
    let mut a = m.clone();
    let mut det = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        let inv = a[c][c].recip();
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            for j in c..n {
                let t = &a[c][j] * &f;
                a[i][j] -= t;
            }
        }
    }
    det
}

/// Extreme rays of the pointed cone `{x : eqs·x = 0, ineqs·x >= 0}` in `Q^dim`,
/// each scaled to a primitive integer vector, sorted.
///
/// Brute force over active sets: a ray is extreme iff its active constraints
/// have rank `dim - 1`. The caller must ensure the cone contains no line.
pub fn extreme_rays(eqs: &[Vec<Q>], ineqs: &[Vec<Q>], dim: usize) -> Vec<Vec<BigInt>> {
    let eq_rank = rank(&eqs.to_vec());
    if eq_rank >= dim {
        return Vec::new();
    }
    let k = dim - 1 - eq_rank;
    let mut out: Vec<Vec<BigInt>> = Vec::new();
    let mut pick = Vec::with_capacity(k);
    choose(ineqs.len(), k, 0, &mut pick, &mut |sel| {
        let mut m: Matrix = eqs.to_vec();
        m.extend(sel.iter().map(|&i| ineqs[i].clone()));
        let ns = nullspace(&m, dim);
        if ns.len() != 1 {
            return;
        }
        for cand in [ns[0].clone(), ns[0].iter().map(|x| -x).collect()] {
            if ineqs.iter().all(|f| !dot(f, &cand).is_negative()) {
                let p = primitive(&cand);
                if !out.contains(&p) {
                    out.push(p);
                }
            }
        }
    });
    out.sort();
    out
}

fn choose(n: usize, k: usize, start: usize, pick: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if pick.len() == k {
        f(pick);
        return;
    }
    for i in start..n {
        if n - i < k - pick.len() {
            break;
        }
        pick.push(i);
        choose(n, k, i + 1, pick, f);
        pick.pop();
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    choose(n, k, 0, &mut Vec::new(), &mut |s| out.push(s.to_vec()));
    out
}

pub fn to_q(v: &[BigInt]) -> Vec<Q> {
    v.iter().map(|x| Q::from_integer(x.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::frac;

    #[test]
    fn inverse_and_det_of_cartan_a2() {
        let c = from_int_rows(&[vec![2, -1], vec![-1, 2]]);
        assert_eq!(determinant(&c), q(3));
        let inv = inverse(&c).unwrap();
        assert_eq!(inv[0][0], frac(2, 3));
        assert_eq!(mat_mul(&c, &inv), identity(2));
    }

    #[test]
    fn nullspace_dimension() {
        let m = from_int_rows(&[vec![1, 1, 0]]);
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(mat_vec(&m, &v).iter().all(|x| x.is_zero()));
        }
        assert_eq!(nullspace(&Vec::new(), 2).len(), 2);
    }

    #[test]
    fn solve_inconsistent() {
        let m = from_int_rows(&[vec![1, 1], vec![2, 2]]);
        assert!(solve(&m, &[q(1), q(3)]).is_none());
        assert!(solve(&m, &[q(1), q(2)]).is_some());
    }

    #[test]
    fn rays_of_quadrant_and_octant_slice() {
        let ineqs = from_int_rows(&[vec![1, 0], vec![0, 1]]);
        let rays = extreme_rays(&[], &ineqs, 2);
        assert_eq!(rays.len(), 2);
        // x + y = z, x,y,z >= 0 in Q^3 -> rays (1,0,1), (0,1,1)
        let eqs = from_int_rows(&[vec![1, 1, -1]]);
        let ineqs = from_int_rows(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        let rays = extreme_rays(&eqs, &ineqs, 3);
        let expect: Vec<Vec<BigInt>> = vec![
            vec![0.into(), 1.into(), 1.into()],
            vec![1.into(), 0.into(), 1.into()],
        ];
        assert_eq!(rays, expect);
    }
}
