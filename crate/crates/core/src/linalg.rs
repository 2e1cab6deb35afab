//! Dense exact linear algebra over ℚ and small symbolic determinants.

use num_traits::{One, Zero};

use crate::poly::{TPoly, Q};

pub type Matrix = Vec<Vec<Q>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut s = Q::zero();
                    for k in 0..inner {
                        if !row[k].is_zero() && !b[k][j].is_zero() {
                            s += &row[k] * &b[k][j];
                        }
                    }
                    s
                })
                .collect()
        })
        .collect()
}

/// Solves `A·X = B` for square `A`; `None` if `A` is singular.
pub fn solve_many(a: &Matrix, b: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().chain(rb).cloned().collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        let inv = aug[col][col].recip();
        for x in aug[col].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = aug[col].clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
    }
    Some(aug.into_iter().map(|row| row[n..n + m].to_vec()).collect())
}

pub fn inverse(a: &Matrix) -> Option<Matrix> {
    solve_many(a, &identity(a.len()))
}

pub fn determinant(a: &Matrix) -> Q {
    let n = a.len();
    let mut m = a.clone();
    let mut det = Q::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Q::zero();
        };
        if pivot != col {
            m.swap(col, pivot);
            det = -det;
        }
        det *= &m[col][col];
        let inv = m[col][col].recip();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] * &inv;
            for c in col..n {
                let d = &f * &m[col][c];
                m[r][c] -= d;
            }
        }
    }
    det
}

/// Rank of a (possibly rectangular) matrix.
pub fn rank(a: &Matrix) -> usize {
    let mut m = a.clone();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = m[rank][col].recip();
        for r in rank + 1..m.len() {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] * &inv;
            for c in col..cols {
                let d = &f * &m[rank][c];
                m[r][c] -= d;
            }
        }
        rank += 1;
    }
    rank
}

/// Determinant by cofactor expansion along the first row. Only meant for
/// the small blocks that appear in chart transitions.
pub fn det_symbolic(m: &[Vec<TPoly>]) -> TPoly {
    match m.len() {
        0 => TPoly::one(),
        1 => m[0][0].clone(),
        n => {
            let mut out = TPoly::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor = minor_of(m, 0, j);
                let term = &m[0][j] * &det_symbolic(&minor);
                if j % 2 == 0 {
                    out += term;
                } else {
                    out -= term;
                }
            }
            out
        }
    }
}

/// `adj(M)`, so that `M·adj(M) = det(M)·E`.
pub fn adjugate_symbolic(m: &[Vec<TPoly>]) -> Vec<Vec<TPoly>> {
    let n = m.len();
    if n == 1 {
        return vec![vec![TPoly::one()]];
    }
    let mut adj = vec![vec![TPoly::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let c = det_symbolic(&minor_of(m, i, j));
            adj[j][i] = if (i + j) % 2 == 0 { c } else { -c };
        }
    }
    adj
}

fn minor_of(m: &[Vec<TPoly>], row: usize, col: usize) -> Vec<Vec<TPoly>> {
    m.iter()
        .enumerate()
        .filter(|(i, _)| *i != row)
        .map(|(_, r)| {
            r.iter()
                .enumerate()
                .filter(|(j, _)| *j != col)
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect()
}
