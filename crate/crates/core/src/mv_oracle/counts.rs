use std::collections::BTreeMap;

use rayon::prelude::*;

use super::lattice::{enumerate_cell, pivot_vectors, relative_position, LatticePoint};
use super::TruncationWindow;
use crate::error::{Error, Result};
use crate::root_datum::Coweight;

/// Raw counts keyed by a coweight, with the field characteristic for
/// reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleTable {
    pub q: u64,
    pub p: u64,
    pub counts: BTreeMap<Coweight, u64>,
}

impl OracleTable {
    pub fn residues(&self) -> BTreeMap<Coweight, u64> {
        self.counts.iter().map(|(k, c)| (k.clone(), c % self.p)).collect()
    }
}

fn check_dominant(window: &TruncationWindow, lambda: &Coweight) -> Result<()> {
    window.check_coweight(lambda)?;
    if !window.datum().is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.0.clone()));
    }
    Ok(())
}

fn matches(window: &TruncationWindow, pos: &Coweight, lambda: &Coweight, closure: bool) -> bool {
    if closure {
        window.datum().dominance_leq(pos, lambda)
    } else {
        pos == lambda
    }
}

fn count_cell(window: &TruncationWindow, pivots: &[u32], lambda: &Coweight, closure: bool) -> Result<u64> {
    let origin = LatticePoint::standard(window);
    let mut n = 0;
    for l in enumerate_cell(window, pivots) {
        let pos = relative_position(window.ring(), &origin, &l)?;
        if matches(window, &pos, lambda, closure) {
            n += 1;
        }
    }
    Ok(n)
}

/// `#(S_ν ∩ Gr^λ)(F_q)`, or `#(S_ν ∩ Gr^{≤λ})(F_q)` when `closure`.
pub fn mv_count(window: &TruncationWindow, nu: &Coweight, lambda: &Coweight, closure: bool) -> Result<u64> {
    check_dominant(window, lambda)?;
    window.check_coweight(nu)?;
    let a = window.a() as i64;
    let pivots: Vec<u32> = nu.entries().iter().map(|x| (x + a) as u32).collect();
    count_cell(window, &pivots, lambda, closure)
}

/// [`mv_count`] for every `ν` met, skipping empty cells.
pub fn mv_counts_by_nu(window: &TruncationWindow, lambda: &Coweight, closure: bool) -> Result<OracleTable> {
    check_dominant(window, lambda)?;
    let total = lambda.entries().iter().sum::<i64>() + window.n() as i64 * window.a() as i64;
    let cells = pivot_vectors(window, Some(total as u32));
    let counts: Vec<(Vec<u32>, u64)> = window.install(|| {
        cells
            .par_iter()
            .map(|v| count_cell(window, v, lambda, closure).map(|c| (v.clone(), c)))
            .collect::<Result<Vec<_>>>()
    })??;
    let a = window.a() as i64;
    let counts = counts
        .into_iter()
        .filter(|(_, c)| *c > 0)
        .map(|(v, c)| (Coweight(v.iter().map(|x| *x as i64 - a).collect()), c))
        .collect();
    Ok(OracleTable { q: window.q(), p: window.p(), counts })
}

/// `ν ↦ #(S_ν ∩ Gr^{≤λ})(F_q) mod p` over every `ν` met.
pub fn satake_transform_oracle(window: &TruncationWindow, lambda: &Coweight) -> Result<BTreeMap<Coweight, u64>> {
    Ok(mv_counts_by_nu(window, lambda, true)?.residues())
}

fn gr_points(window: &TruncationWindow, mu: &Coweight) -> Result<Vec<LatticePoint>> {
    let total = mu.entries().iter().sum::<i64>() + window.n() as i64 * window.a() as i64;
    let cells = pivot_vectors(window, Some(total as u32));
    let origin = LatticePoint::standard(window);
    let found: Vec<Vec<LatticePoint>> = window.install(|| {
        cells
            .par_iter()
            .map(|v| {
                let mut keep = Vec::new();
                for l in enumerate_cell(window, v) {
                    if relative_position(window.ring(), &origin, &l)? == *mu {
                        keep.push(l);
                    }
                }
                Ok(keep)
            })
            .collect::<Result<Vec<_>>>()
    })??;
    Ok(found.into_iter().flatten().collect())
}

/// `#{L' : inv(Λ_0, L') = μ_1, inv(L', L) = μ_2}` for a given outer lattice
/// `L`; mod `p` this is the structure constant of `𝟙_{μ_1} * 𝟙_{μ_2}` at
/// `inv(Λ_0, L)`.
pub fn convolution_count_at(
    window: &TruncationWindow,
    mu1: &Coweight,
    mu2: &Coweight,
    outer: &LatticePoint,
) -> Result<u64> {
    check_dominant(window, mu1)?;
    window.datum().check(mu2)?;
    let mut n = 0;
    for l in gr_points(window, mu1)? {
        if relative_position(window.ring(), &l, outer)? == *mu2 {
            n += 1;
        }
    }
    Ok(n)
}

/// [`convolution_count_at`] with `L = t^λ Λ_0`. The inner lattices live in
/// `window`; the outer one in a window widened to hold `λ`.
pub fn convolution_count(window: &TruncationWindow, mu1: &Coweight, mu2: &Coweight, lambda: &Coweight) -> Result<u64> {
    let outer_window = widened(window, lambda)?;
    let outer = LatticePoint::torus(&outer_window, lambda)?;
    convolution_count_at(window, mu1, mu2, &outer)
}

fn widened(window: &TruncationWindow, lambda: &Coweight) -> Result<TruncationWindow> {
    let a = (lambda.max_abs() as u32).max(window.a());
    TruncationWindow::new(window.n(), window.q(), a)
}

/// Convolution counts for every dominant `λ` of the right size with entries
/// bounded by `|μ_1| + |μ_2|`, including zero counts.
pub fn convolution_table(window: &TruncationWindow, mu1: &Coweight, mu2: &Coweight) -> Result<OracleTable> {
    check_dominant(window, mu1)?;
    window.datum().check(mu2)?;
    let bound = mu1.max_abs() + mu2.max_abs();
    let total: i64 = mu1.entries().iter().sum::<i64>() + mu2.entries().iter().sum::<i64>();
    let n = window.n();
    let datum = window.datum();
    let mut targets = Vec::new();
    let mut cur = vec![-bound; n];
    'outer: loop {
        let c = Coweight(cur.clone());
        if cur.iter().sum::<i64>() == total && datum.is_dominant(&c) {
            targets.push(c);
        }
        let mut i = n;
        loop {
            if i == 0 {
                break 'outer;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] <= bound {
                break;
            }
            cur[i] = -bound;
        }
    }
    let inner = gr_points(window, mu1)?;
    let mut counts = BTreeMap::new();
    for lambda in targets {
        let w = widened(window, &lambda)?;
        let outer = LatticePoint::torus(&w, &lambda)?;
        let mut k = 0;
        for l in &inner {
            if relative_position(window.ring(), l, &outer)? == *mu2 {
                k += 1;
            }
        }
        counts.insert(lambda, k);
    }
    Ok(OracleTable { q: window.q(), p: window.p(), counts })
}
