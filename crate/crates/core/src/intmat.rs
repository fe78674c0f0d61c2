//! Small dense integer linear algebra: Smith and Hermite normal forms,
//! integer kernels and exact solves. Matrices are `Vec<Vec<i64>>` in
//! row-major order; all dimensions handled here are desk-scale (≤ 8).

#![allow(clippy::needless_range_loop)]

use num_rational::Ratio;

pub type Matrix = Vec<Vec<i64>>;

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

pub fn mat_vec(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter().map(|row| dot(row, v)).collect()
}

pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter().map(|row| (0..cols).map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum()).collect()).collect()
}

pub fn transpose(m: &[Vec<i64>], ncols: usize) -> Matrix {
    (0..ncols).map(|j| m.iter().map(|row| row[j]).collect()).collect()
}

/// `left · A · right = diag` with `left`, `right` unimodular.
#[derive(Clone, Debug)]
pub struct Smith {
    pub diag: Vec<i64>,
    pub left: Matrix,
    pub right: Matrix,
}

impl Smith {
    pub fn rank(&self) -> usize {
        self.diag.iter().filter(|d| **d != 0).count()
    }
}

fn swap_cols(m: &mut [Vec<i64>], i: usize, j: usize) {
    for row in m.iter_mut() {
        row.swap(i, j);
    }
}

/// Smith normal form of an `nrows × ncols` matrix.
pub fn smith(a: &[Vec<i64>], ncols: usize) -> Smith {
    let nrows = a.len();
    let mut d: Matrix = a.to_vec();
    let mut left = identity(nrows);
    let mut right = identity(ncols);
    let steps = nrows.min(ncols);

    for t in 0..steps {
        loop {
            // smallest nonzero entry of the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..nrows {
                for j in t..ncols {
                    if d[i][j] != 0 && best.is_none_or(|(bi, bj)| d[i][j].abs() < d[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            d.swap(t, pi);
            left.swap(t, pi);
            swap_cols(&mut d, t, pj);
            swap_cols(&mut right, t, pj);

            let mut clean = true;
            let p = d[t][t];
            for i in t + 1..nrows {
                let q = d[i][t].div_euclid(p);
                if q != 0 {
                    for j in 0..ncols {
                        d[i][j] -= q * d[t][j];
                    }
                    for j in 0..nrows {
                        left[i][j] -= q * left[t][j];
                    }
                }
                if d[i][t] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..ncols {
                let q = d[t][j].div_euclid(p);
                if q != 0 {
                    for i in 0..nrows {
                        d[i][j] -= q * d[i][t];
                    }
                    for i in 0..ncols {
                        right[i][j] -= q * right[i][t];
                    }
                }
                if d[t][j] != 0 {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility condition on the rest of the block
            let bad = (t + 1..nrows).find(|&i| (t + 1..ncols).any(|j| d[i][j] % p != 0));
            match bad {
                Some(i) => {
                    for j in 0..ncols {
                        d[t][j] += d[i][j];
                    }
                    for j in 0..nrows {
                        left[t][j] += left[i][j];
                    }
                }
                None => break,
            }
        }
        if d[t][t] < 0 {
            for j in 0..ncols {
                d[t][j] = -d[t][j];
            }
            for j in 0..nrows {
                left[t][j] = -left[t][j];
            }
        }
    }

    Smith { diag: (0..steps).map(|i| d[i][i]).collect(), left, right }
}

/// Row-style Hermite normal form of the lattice spanned by `rows`: echelon,
/// positive pivots, entries above each pivot reduced into `[0, pivot)`.
/// Zero rows are dropped.
pub fn hermite_rows(rows: &[Vec<i64>], ncols: usize) -> Matrix {
    let mut m: Matrix = rows.to_vec();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in r..m.len() {
                if m[i][c] != 0 && best.is_none_or(|b| m[i][c].abs() < m[b][c].abs()) {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            m.swap(r, b);
            let p = m[r][c];
            let mut done = true;
            for i in r + 1..m.len() {
                let q = m[i][c].div_euclid(p);
                if q != 0 {
                    for j in 0..ncols {
                        m[i][j] -= q * m[r][j];
                    }
                }
                if m[i][c] != 0 {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if m[r][c] == 0 {
            continue;
        }
        if m[r][c] < 0 {
            for x in m[r].iter_mut() {
                *x = -*x;
            }
        }
        let p = m[r][c];
        for i in 0..r {
            let q = m[i][c].div_euclid(p);
            if q != 0 {
                for j in 0..ncols {
                    m[i][j] -= q * m[r][j];
                }
            }
        }
        r += 1;
    }
    m.truncate(r);
    m
}

/// Canonical representative of `v` modulo the lattice with Hermite basis `hnf`.
pub fn reduce_mod(v: &[i64], hnf: &[Vec<i64>]) -> Vec<i64> {
    let mut out = v.to_vec();
    for row in hnf {
        let Some(c) = row.iter().position(|x| *x != 0) else {
            continue;
        };
        let q = out[c].div_euclid(row[c]);
        if q != 0 {
            for (o, r) in out.iter_mut().zip(row) {
                *o -= q * r;
            }
        }
    }
    out
}

/// Integer kernel `{x ∈ Z^ncols : A x = 0}` as a Hermite-normalized basis.
pub fn kernel(a: &[Vec<i64>], ncols: usize) -> Matrix {
    if a.is_empty() {
        return identity(ncols);
    }
    let s = smith(a, ncols);
    let r = s.rank();
    let basis: Matrix = (r..ncols).map(|j| (0..ncols).map(|i| s.right[i][j]).collect()).collect();
    hermite_rows(&basis, ncols)
}

/// An integer solution of `Σ x_i cols[i] = target`, if one exists.
pub fn solve_integer(cols: &[Vec<i64>], target: &[i64]) -> Option<Vec<i64>> {
    let n = target.len();
    let k = cols.len();
    if k == 0 {
        return target.iter().all(|x| *x == 0).then(Vec::new);
    }
    let a: Matrix = (0..n).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
    let s = smith(&a, k);
    let ub = mat_vec(&s.left, target);
    let mut y = vec![0i64; k];
    for (i, &ubi) in ub.iter().enumerate() {
        let d = if i < s.diag.len() { s.diag[i] } else { 0 };
        if d == 0 {
            if ubi != 0 {
                return None;
            }
        } else {
            if ubi % d != 0 {
                return None;
            }
            y[i] = ubi / d;
        }
    }
    Some(mat_vec(&s.right, &y))
}

pub type Rational = Ratio<i64>;

/// Coordinates of `target` in the rational span of linearly independent
/// `cols`; `None` when `target` lies outside that span.
pub fn solve_rational(cols: &[Vec<i64>], target: &[i64]) -> Option<Vec<Rational>> {
    let n = target.len();
    let k = cols.len();
    // augmented n × (k+1) system
    let mut m: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rational> = cols.iter().map(|c| Rational::from(c[i])).collect();
            row.push(Rational::from(target[i]));
            row
        })
        .collect();
    let mut pivots = Vec::with_capacity(k);
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..n).find(|&i| m[i][c] != Rational::from(0)) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..n {
            if i != r && m[i][c] != Rational::from(0) {
                let f = m[i][c];
                for j in 0..=k {
                    let v = m[r][j];
                    m[i][j] -= f * v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| row[k] != Rational::from(0)) {
        return None;
    }
    let mut x = vec![Rational::from(0); k];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = m[row][k];
    }
    Some(x)
}

pub fn rank(rows: &[Vec<i64>], ncols: usize) -> usize {
    hermite_rows(rows, ncols).len()
}

/// Leading principal minors, computed by exact rational elimination.
pub fn leading_minors(m: &[Vec<i64>]) -> Vec<Rational> {
    let n = m.len();
    (1..=n)
        .map(|k| {
            let mut a: Vec<Vec<Rational>> = (0..k).map(|i| (0..k).map(|j| Rational::from(m[i][j])).collect()).collect();
            let mut det = Rational::from(1);
            for c in 0..k {
                let Some(p) = (c..k).find(|&i| a[i][c] != Rational::from(0)) else {
                    return Rational::from(0);
                };
                if p != c {
                    a.swap(p, c);
                    det = -det;
                }
                det *= a[c][c];
                for i in c + 1..k {
                    let f = a[i][c] / a[c][c];
                    for j in c..k {
                        let v = a[c][j];
                        a[i][j] -= f * v;
                    }
                }
            }
            det
        })
        .collect()
}
