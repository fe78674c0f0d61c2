use rayon::prelude::*;

use super::poly::{self, Poly, PolyRing};
use super::TruncationWindow;
use crate::error::{Error, Result};
use crate::root_datum::Coweight;

/// A lattice in a truncation window, in canonical Hermite form.
///
/// The lattice is `t^{-shift} · span(b_0, …, b_{n-1})` with
/// `b_i = t^{pivots[i]} e_i + Σ_{j<i} above[i][j] e_j`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    shift: u32,
    pivots: Vec<u32>,
    above: Vec<Vec<Poly>>,
}

impl LatticePoint {
    /// `t^ν Λ_0`.
    pub fn torus(window: &TruncationWindow, nu: &Coweight) -> Result<Self> {
        window.check_coweight(nu)?;
        let a = window.a() as i64;
        Ok(LatticePoint {
            shift: window.a(),
            pivots: nu.entries().iter().map(|x| (x + a) as u32).collect(),
            above: (0..window.n()).map(|i| vec![Vec::new(); i]).collect(),
        })
    }

    /// `Λ_0`.
    pub fn standard(window: &TruncationWindow) -> Self {
        LatticePoint::torus(window, &Coweight::zero(window.n())).expect("zero fits every window")
    }

    /// The lattice `t^{-a} · span(gens) + t^a Λ_0`; each generator is a
    /// vector of polynomials (entries of `t^a v`).
    pub fn from_generators(window: &TruncationWindow, gens: &[Vec<Poly>]) -> Result<Self> {
        for g in gens {
            if g.len() != window.n() {
                return Err(Error::DimensionMismatch { expected: window.n(), got: g.len() });
            }
        }
        Ok(canonicalize(window, gens.to_vec()))
    }

    pub fn shift(&self) -> u32 {
        self.shift
    }

    pub fn pivots(&self) -> &[u32] {
        &self.pivots
    }

    /// Entries above the diagonal: `above()[i][j]` is the `e_j`-coordinate of
    /// `b_i`, `j < i`.
    pub fn above(&self) -> &[Vec<Poly>] {
        &self.above
    }

    /// The coweight `ν` with `L ∈ U(E) t^ν Λ_0`.
    pub fn iwasawa_component(&self) -> Coweight {
        Coweight(self.pivots.iter().map(|v| *v as i64 - self.shift as i64).collect())
    }

    /// Basis vectors as exact polynomial vectors (entries of `t^shift b_i`).
    pub fn generators(&self) -> Vec<Vec<Poly>> {
        let n = self.pivots.len();
        (0..n)
            .map(|i| {
                let mut row = self.above[i].clone();
                row.push(poly::shift(&[1], self.pivots[i]));
                row.resize(n, Vec::new());
                row
            })
            .collect()
    }

    /// Column matrix `m[j][i] = e_j`-coordinate of `b_i`; upper triangular.
    fn matrix(&self) -> Vec<Vec<Poly>> {
        let gens = self.generators();
        let n = gens.len();
        (0..n).map(|j| (0..n).map(|i| gens[i][j].clone()).collect()).collect()
    }
}

fn reduce_vec(v: &mut [Poly], n: u32) {
    for x in v.iter_mut() {
        *x = poly::truncate(std::mem::take(x), n);
    }
}

fn axpy(ring: &PolyRing, target: &mut [Poly], factor: &[u8], source: &[Poly], n: u32) {
    for (t, s) in target.iter_mut().zip(source) {
        let prod = ring.mul_trunc(factor, s, n);
        *t = ring.sub(t, &prod);
    }
}

fn canonicalize(window: &TruncationWindow, gens: Vec<Vec<Poly>>) -> LatticePoint {
    let ring = window.ring();
    let n = window.n();
    let big_n = window.precision();
    let mut gens: Vec<Vec<Poly>> = gens
        .into_iter()
        .map(|mut g| {
            reduce_vec(&mut g, big_n);
            g
        })
        .filter(|g| g.iter().any(|x| !x.is_empty()))
        .collect();
    let mut pivots = vec![big_n; n];
    let mut rows: Vec<Vec<Poly>> = vec![Vec::new(); n];
    for c in (0..n).rev() {
        let best = gens.iter().enumerate().filter_map(|(i, g)| poly::valuation(&g[c]).map(|v| (v, i))).min();
        let Some((v, idx)) = best else {
            rows[c] = vec![Vec::new(); c];
            continue;
        };
        let mut p = gens.remove(idx);
        let unit = poly::high(&p[c], v);
        let inv = ring.series_inverse(&unit, big_n);
        for x in p.iter_mut() {
            *x = ring.mul_trunc(x, &inv, big_n);
        }
        for g in gens.iter_mut() {
            if !g[c].is_empty() {
                let factor = poly::high(&g[c], v);
                axpy(ring, g, &factor, &p, big_n);
            }
        }
        let mut syzygy: Vec<Poly> = p.iter().map(|x| poly::truncate(poly::shift(x, big_n - v), big_n)).collect();
        syzygy[c] = Vec::new();
        gens.push(syzygy);
        gens.retain(|g| g.iter().any(|x| !x.is_empty()));
        pivots[c] = v;
        p.truncate(c);
        rows[c] = p;
    }
    // reduce entries above the diagonal modulo the pivots
    for i in 0..n {
        for j in (0..i).rev() {
            let q = poly::high(&rows[i][j], pivots[j]);
            if q.is_empty() {
                continue;
            }
            let source: Vec<Poly> = {
                let mut s = rows[j].clone();
                s.push(poly::shift(&[1], pivots[j]));
                s
            };
            let (head, _) = rows[i].split_at_mut(j + 1);
            axpy(ring, head, &q, &source, big_n);
        }
    }
    LatticePoint { shift: window.a(), pivots, above: rows }
}

fn polys_below(q: u8, deg: u32) -> impl Iterator<Item = Poly> {
    let total = (q as u64).pow(deg);
    (0..total).map(move |mut idx| {
        let mut p = Vec::with_capacity(deg as usize);
        for _ in 0..deg {
            p.push((idx % q as u64) as u8);
            idx /= q as u64;
        }
        while p.last() == Some(&0) {
            p.pop();
        }
        p
    })
}

/// Every lattice of the window with Iwasawa coweight `v − a`, in a fixed
/// order.
pub fn enumerate_cell(window: &TruncationWindow, pivots: &[u32]) -> Vec<LatticePoint> {
    let n = window.n();
    let big_n = window.precision();
    let q = window.ring().field().order() as u8;
    // free slots: (i, j) with j < i and b_i a genuine generator
    let slots: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (0..i).map(move |j| (i, j))).filter(|(i, _)| pivots[*i] < big_n).collect();
    let mut out = Vec::new();
    let mut choice: Vec<Poly> = vec![Vec::new(); slots.len()];
    let options: Vec<Vec<Poly>> = slots.iter().map(|(_, j)| polys_below(q, pivots[*j]).collect()).collect();
    let mut counter = vec![0usize; slots.len()];
    loop {
        for (k, c) in counter.iter().enumerate() {
            choice[k] = options[k][*c].clone();
        }
        let mut above: Vec<Vec<Poly>> = (0..n).map(|i| vec![Vec::new(); i]).collect();
        for ((i, j), p) in slots.iter().zip(&choice) {
            above[*i][*j] = p.clone();
        }
        let candidate = LatticePoint { shift: window.a(), pivots: pivots.to_vec(), above };
        if canonicalize(window, candidate.generators()) == candidate {
            out.push(candidate);
        }
        let mut k = 0;
        while k < counter.len() {
            counter[k] += 1;
            if counter[k] < options[k].len() {
                break;
            }
            counter[k] = 0;
            k += 1;
        }
        if k == counter.len() {
            break;
        }
    }
    out
}

/// All pivot vectors in `[0, 2a]^n` whose sum is `total` (or all of them).
pub(crate) fn pivot_vectors(window: &TruncationWindow, total: Option<u32>) -> Vec<Vec<u32>> {
    let n = window.n();
    let big_n = window.precision();
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    loop {
        if total.is_none_or(|t| cur.iter().sum::<u32>() == t) {
            out.push(cur.clone());
        }
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] <= big_n {
                break;
            }
            cur[i] = 0;
        }
    }
}

/// Every lattice `t^a Λ_0 ⊆ L ⊆ t^{-a} Λ_0`, each exactly once, ordered by
/// Iwasawa coweight and then by canonical form.
pub fn enumerate_lattices(window: &TruncationWindow) -> Result<Vec<LatticePoint>> {
    let cells = pivot_vectors(window, None);
    window.install(|| cells.par_iter().flat_map_iter(|v| enumerate_cell(window, v)).collect())
}

/// Elementary divisor exponents of a square polynomial matrix, computed
/// modulo `t^prec` by valuation-pivot elimination; ascending.
pub(crate) fn smith_exponents(ring: &PolyRing, mut m: Vec<Vec<Poly>>, prec: u32) -> Result<Vec<u32>> {
    let n = m.len();
    for row in m.iter_mut() {
        reduce_vec(row, prec);
    }
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let mut best: Option<(u32, usize, usize)> = None;
        for (i, row) in m.iter().enumerate().skip(k) {
            for (j, x) in row.iter().enumerate().skip(k) {
                if let Some(v) = poly::valuation(x) {
                    if best.is_none_or(|(bv, _, _)| v < bv) {
                        best = Some((v, i, j));
                    }
                }
            }
        }
        let Some((v, i, j)) = best else {
            return Err(Error::PrecisionInsufficient(format!("elementary divisor {k} is not visible modulo t^{prec}")));
        };
        m.swap(k, i);
        for row in m.iter_mut() {
            row.swap(k, j);
        }
        let inv = ring.series_inverse(&poly::high(&m[k][k], v), prec);
        for x in m[k].iter_mut() {
            *x = ring.mul_trunc(x, &inv, prec);
        }
        let pivot_row = m[k].clone();
        for row in m.iter_mut().skip(k + 1) {
            if !row[k].is_empty() {
                let factor = poly::high(&row[k], v);
                axpy(ring, row, &factor, &pivot_row, prec);
            }
        }
        for x in m[k].iter_mut().skip(k + 1) {
            x.clear();
        }
        out.push(v);
    }
    out.sort_unstable();
    Ok(out)
}

/// `inv(L_0, L)`: the dominant `λ` with `L = g t^λ L_0`-shape, i.e. the
/// elementary divisors of `L` relative to `L_0`, sorted weakly decreasing.
pub fn relative_position(ring: &PolyRing, l0: &LatticePoint, l: &LatticePoint) -> Result<Coweight> {
    let n = l0.pivots.len();
    if l.pivots.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: l.pivots.len() });
    }
    let b0 = l0.matrix();
    let b = l.matrix();
    let s: u32 = l0.pivots.iter().sum();
    // Y = t^S B0^{-1} B by back substitution; exact because t^S B0^{-1} = adj(B0)
    let mut y: Vec<Vec<Poly>> = vec![vec![Vec::new(); n]; n];
    for c in 0..n {
        for i in (0..n).rev() {
            let mut acc = poly::shift(&b[i][c], s);
            for j in i + 1..n {
                acc = ring.sub(&acc, &ring.mul(&b0[i][j], &y[j][c]));
            }
            y[i][c] = poly::unshift(&acc, l0.pivots[i])?;
        }
    }
    let det_val = (n as u32 - 1) * s + l.pivots.iter().sum::<u32>();
    let exps = smith_exponents(ring, y, det_val + 1)?;
    if exps.iter().sum::<u32>() != det_val {
        return Err(Error::PrecisionInsufficient("elementary divisors do not account for the determinant".into()));
    }
    let offset = s as i64 + l.shift as i64 - l0.shift as i64;
    let mut lambda: Vec<i64> = exps.iter().map(|e| *e as i64 - offset).collect();
    lambda.sort_unstable_by(|a, b| b.cmp(a));
    Ok(Coweight(lambda))
}
