//! Based root data with integer coordinates.
//!
//! A datum is given by the cocharacter rank `n`, the simple roots (vectors on
//! the character side) and the simple coroots (vectors on the cocharacter
//! side); the pairing is the dot product. Everything downstream (dominance,
//! Weyl group, Levis, lengths) is derived exactly from these vectors.
//!
//! Coordinate conventions of the built-in families:
//!
//! * `GL_n`: `X_* = Z^n`, `α_i = α_i^∨ = e_i − e_{i+1}`; dominant means weakly
//!   decreasing.
//! * `SL_n`: `X_*` is the coroot lattice, written in the basis of simple
//!   coroots, so `α_i^∨ = e_i` and `α_i` is the `i`-th row of the Cartan matrix.
//! * `PGL_n`: `X_*` is the coweight lattice in the basis of fundamental
//!   coweights, so `α_i = e_i` and `α_i^∨` is the `i`-th Cartan column.
//! * `Sp_2r`: the diagonal torus `diag(x_1..x_r, x_r^{-1}..x_1^{-1})`, so
//!   `α_i = α_i^∨ = e_i − e_{i+1}` for `i < r`, `α_r = 2e_r`, `α_r^∨ = e_r`.

mod group_json;
mod levi;
mod weyl;

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intmat::{self, Matrix, Rational};

pub use group_json::{parse_group, GroupSpec};
pub use levi::{ComponentGroup, Levi};
pub use weyl::{AffineWeylElement, WeylElement, MAX_WEYL_ORDER};

/// A cocharacter, in the coordinates of the datum's cocharacter lattice.
/// Ordered lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coweight(pub Vec<i64>);

impl Coweight {
    pub fn zero(n: usize) -> Self {
        Coweight(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn add(&self, other: &Coweight) -> Coweight {
        Coweight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Coweight) -> Coweight {
        Coweight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Coweight {
        Coweight(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> Coweight {
        self.scale(-1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| *x == 0)
    }

    pub fn max_abs(&self) -> i64 {
        self.0.iter().map(|x| x.abs()).max().unwrap_or(0)
    }
}

impl From<Vec<i64>> for Coweight {
    fn from(v: Vec<i64>) -> Self {
        Coweight(v)
    }
}

impl From<&[i64]> for Coweight {
    fn from(v: &[i64]) -> Self {
        Coweight(v.to_vec())
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A positive root: its vector on the character side and its coefficients in
/// the basis of simple roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveRoot {
    pub root: Vec<i64>,
    pub coeffs: Vec<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "GL")]
    Gl,
    #[serde(rename = "SL")]
    Sl,
    #[serde(rename = "PGL")]
    Pgl,
    #[serde(rename = "Sp")]
    Sp,
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "GL" => Ok(Family::Gl),
            "SL" => Ok(Family::Sl),
            "PGL" => Ok(Family::Pgl),
            "Sp" => Ok(Family::Sp),
            other => Err(Error::UnsupportedGroup(other.to_string())),
        }
    }
}

const MAX_POSITIVE_ROOTS: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    name: String,
    rank: usize,
    simple_roots: Matrix,
    simple_coroots: Matrix,
    cartan: Matrix,
    positive_roots: Vec<PositiveRoot>,
}

impl RootDatum {
    pub fn new(name: impl Into<String>, rank: usize, simple_roots: Matrix, simple_coroots: Matrix) -> Result<Self> {
        let name = name.into();
        if rank == 0 {
            return Err(Error::InvalidDatum("cocharacter rank must be positive".into()));
        }
        if simple_roots.len() != simple_coroots.len() {
            return Err(Error::InvalidDatum(format!(
                "{} simple roots but {} simple coroots",
                simple_roots.len(),
                simple_coroots.len()
            )));
        }
        for v in simple_roots.iter().chain(&simple_coroots) {
            if v.len() != rank {
                return Err(Error::DimensionMismatch { expected: rank, got: v.len() });
            }
        }
        let l = simple_roots.len();
        if l > rank || intmat::rank(&simple_roots, rank) != l || intmat::rank(&simple_coroots, rank) != l {
            return Err(Error::InvalidDatum("simple roots and coroots must be linearly independent".into()));
        }
        let cartan: Matrix =
            simple_roots.iter().map(|a| simple_coroots.iter().map(|c| intmat::dot(a, c)).collect()).collect();
        #[allow(clippy::needless_range_loop)]
        for i in 0..l {
            if cartan[i][i] != 2 {
                return Err(Error::InvalidDatum(format!("Cartan diagonal entry {i} is not 2")));
            }
            for j in 0..l {
                if i != j && (cartan[i][j] > 0 || (cartan[i][j] == 0) != (cartan[j][i] == 0)) {
                    return Err(Error::InvalidDatum(format!("Cartan entries ({i},{j}) are not generalized-Cartan")));
                }
            }
        }
        if intmat::leading_minors(&cartan).iter().any(|m| *m <= Rational::from(0)) {
            return Err(Error::InvalidDatum("Cartan matrix is not of finite type".into()));
        }
        let positive_roots = positive_root_closure(&simple_roots, &cartan)?;
        Ok(RootDatum { name, rank, simple_roots, simple_coroots, cartan, positive_roots })
    }

    /// One of the built-in families. `rank_param` is `n` for `GL_n`, `SL_n`,
    /// `PGL_n` and `r` for `Sp_{2r}`.
    pub fn standard(family: Family, rank_param: usize) -> Result<Self> {
        let unsupported = || Error::UnsupportedGroup(format!("{family:?} with rank parameter {rank_param}"));
        match family {
            Family::Gl => {
                let n = rank_param;
                if n == 0 {
                    return Err(unsupported());
                }
                let roots: Matrix = (0..n - 1).map(|i| (0..n).map(|j| type_a_simple(i, j)).collect()).collect();
                RootDatum::new(format!("GL{n}"), n, roots.clone(), roots)
            }
            Family::Sl => {
                let n = rank_param;
                if n < 2 {
                    return Err(unsupported());
                }
                let c = type_a_cartan(n - 1);
                RootDatum::new(format!("SL{n}"), n - 1, c, intmat::identity(n - 1))
            }
            Family::Pgl => {
                let n = rank_param;
                if n < 2 {
                    return Err(unsupported());
                }
                let c = type_a_cartan(n - 1);
                let cols = intmat::transpose(&c, n - 1);
                RootDatum::new(format!("PGL{n}"), n - 1, intmat::identity(n - 1), cols)
            }
            Family::Sp => {
                let r = rank_param;
                if r < 2 {
                    return Err(unsupported());
                }
                let mut roots: Matrix = (0..r - 1).map(|i| (0..r).map(|j| type_a_simple(i, j)).collect()).collect();
                let mut coroots = roots.clone();
                let mut long = vec![0; r];
                long[r - 1] = 2;
                roots.push(long);
                let mut short = vec![0; r];
                short[r - 1] = 1;
                coroots.push(short);
                RootDatum::new(format!("Sp{}", 2 * r), r, roots, coroots)
            }
        }
    }

    /// Parses names like `GL3`, `SL2`, `PGL3`, `Sp4`.
    pub fn builtin(name: &str) -> Result<Self> {
        let split = name.find(|c: char| c.is_ascii_digit()).ok_or_else(|| Error::UnsupportedGroup(name.to_string()))?;
        let (fam, num) = name.split_at(split);
        let family: Family = fam.parse()?;
        let num: usize = num.parse().map_err(|_| Error::UnsupportedGroup(name.to_string()))?;
        let rank_param = match family {
            Family::Sp if num.is_multiple_of(2) => num / 2,
            Family::Sp => return Err(Error::UnsupportedGroup(name.to_string())),
            _ => num,
        };
        RootDatum::standard(family, rank_param)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Rank of the cocharacter lattice.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of simple roots.
    pub fn semisimple_rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.simple_roots
    }

    pub fn simple_coroots(&self) -> &[Vec<i64>] {
        &self.simple_coroots
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[PositiveRoot] {
        &self.positive_roots
    }

    pub fn full_levi(&self) -> Levi {
        Levi::full(self)
    }

    pub fn torus_levi(&self) -> Levi {
        Levi::torus()
    }

    /// All `2^ℓ` standard Levis, ordered by their index sets.
    pub fn levis(&self) -> Vec<Levi> {
        let l = self.semisimple_rank();
        (0u32..(1 << l)).map(|mask| Levi::from_indices((0..l).filter(|i| mask & (1 << i) != 0))).collect()
    }

    /// Positive roots of the Levi `L` (those supported on `Δ_L`).
    pub fn levi_positive_roots<'a>(&'a self, levi: &'a Levi) -> impl Iterator<Item = &'a PositiveRoot> {
        self.positive_roots
            .iter()
            .filter(move |r| r.coeffs.iter().enumerate().all(|(i, c)| *c == 0 || levi.contains(i)))
    }

    pub fn check(&self, mu: &Coweight) -> Result<()> {
        if mu.len() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, got: mu.len() });
        }
        Ok(())
    }

    /// `⟨α_i, μ⟩`.
    pub fn pair_simple(&self, i: usize, mu: &Coweight) -> i64 {
        intmat::dot(&self.simple_roots[i], &mu.0)
    }

    pub fn is_dominant(&self, mu: &Coweight) -> bool {
        self.is_dominant_levi(&self.full_levi(), mu)
    }

    pub fn is_dominant_levi(&self, levi: &Levi, mu: &Coweight) -> bool {
        levi.iter().all(|i| self.pair_simple(i, mu) >= 0)
    }

    pub fn is_antidominant(&self, mu: &Coweight) -> bool {
        self.is_antidominant_levi(&self.full_levi(), mu)
    }

    pub fn is_antidominant_levi(&self, levi: &Levi, mu: &Coweight) -> bool {
        levi.iter().all(|i| self.pair_simple(i, mu) <= 0)
    }

    /// Coordinates of `v` in the simple coroots of `L`, if `v` lies in their
    /// rational span.
    pub fn coroot_coordinates(&self, levi: &Levi, v: &Coweight) -> Option<Vec<Rational>> {
        let cols: Matrix = levi.iter().map(|i| self.simple_coroots[i].clone()).collect();
        intmat::solve_rational(&cols, &v.0)
    }

    pub fn dominance_leq(&self, mu: &Coweight, lambda: &Coweight) -> bool {
        self.dominance_leq_levi(&self.full_levi(), mu, lambda)
    }

    /// `μ ≤_L λ`: `λ − μ` is a non-negative integer combination of `Δ_L^∨`.
    pub fn dominance_leq_levi(&self, levi: &Levi, mu: &Coweight, lambda: &Coweight) -> bool {
        match self.coroot_coordinates(levi, &lambda.sub(mu)) {
            Some(c) => c.iter().all(|x| x.is_integer() && *x >= Rational::from(0)),
            None => false,
        }
    }

    pub fn two_rho(&self, nu: &Coweight) -> i64 {
        self.positive_roots.iter().map(|r| intmat::dot(&r.root, &nu.0)).sum()
    }

    pub fn two_rho_levi(&self, levi: &Levi, nu: &Coweight) -> i64 {
        self.levi_positive_roots(levi).map(|r| intmat::dot(&r.root, &nu.0)).sum()
    }

    pub fn dominant_interval(&self, lambda: &Coweight) -> Result<Vec<Coweight>> {
        self.dominant_interval_levi(&self.full_levi(), lambda)
    }

    /// `{μ L-dominant : μ ≤_L λ}`, sorted lexicographically.
    ///
    /// Depth-first subtraction of simple coroots from `λ`; each coroot is
    /// subtracted at most as often as it occurs in `λ − w_0^L λ`, which bounds
    /// every dominant `μ ≤_L λ`.
    pub fn dominant_interval_levi(&self, levi: &Levi, lambda: &Coweight) -> Result<Vec<Coweight>> {
        self.check(lambda)?;
        if !self.is_dominant_levi(levi, lambda) {
            return Err(Error::NotDominant(lambda.0.clone()));
        }
        let w0 = self.longest_element_levi(levi);
        let span = lambda.sub(&w0.apply(lambda)?);
        let caps: Vec<i64> = self
            .coroot_coordinates(levi, &span)
            .ok_or_else(|| Error::InvalidDatum("λ − w_0λ outside the coroot span".into()))?
            .iter()
            .map(|x| x.to_integer())
            .collect();
        let idx: Vec<usize> = levi.iter().collect();

        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut out: BTreeSet<Coweight> = BTreeSet::new();
        let mut stack = vec![vec![0i64; idx.len()]];
        seen.insert(stack[0].clone());
        while let Some(coeffs) = stack.pop() {
            let mut mu = lambda.clone();
            for (k, &i) in idx.iter().enumerate() {
                for (m, c) in mu.0.iter_mut().zip(&self.simple_coroots[i]) {
                    *m -= coeffs[k] * c;
                }
            }
            if self.is_dominant_levi(levi, &mu) {
                out.insert(mu);
            }
            for k in 0..idx.len() {
                if coeffs[k] < caps[k] {
                    let mut next = coeffs.clone();
                    next[k] += 1;
                    if seen.insert(next.clone()) {
                        stack.push(next);
                    }
                }
            }
        }
        Ok(out.into_iter().collect())
    }

    /// `2(ρ − ρ_L)(ν)`; constant on cosets of `ZΦ_L^∨`.
    pub fn deg_p(&self, levi: &Levi, nu: &Coweight) -> i64 {
        self.two_rho(nu) - self.two_rho_levi(levi, nu)
    }
}

fn type_a_simple(i: usize, j: usize) -> i64 {
    if j == i {
        1
    } else if j == i + 1 {
        -1
    } else {
        0
    }
}

fn type_a_cartan(l: usize) -> Matrix {
    (0..l)
        .map(|i| {
            (0..l)
                .map(|j| match i.abs_diff(j) {
                    0 => 2,
                    1 => -1,
                    _ => 0,
                })
                .collect()
        })
        .collect()
}

/// Closes the simple roots under simple reflections, tracking coefficients in
/// the simple-root basis. `s_i β = β − ⟨β, α_i^∨⟩ α_i` maps positive roots
/// other than `α_i` to positive roots.
fn positive_root_closure(simple_roots: &[Vec<i64>], cartan: &[Vec<i64>]) -> Result<Vec<PositiveRoot>> {
    let l = simple_roots.len();
    let mut found: Vec<Vec<i64>> = (0..l).map(|i| (0..l).map(|j| i64::from(i == j)).collect()).collect();
    let mut seen: HashSet<Vec<i64>> = found.iter().cloned().collect();
    let mut k = 0;
    while k < found.len() {
        let beta = found[k].clone();
        k += 1;
        for i in 0..l {
            if beta.iter().enumerate().all(|(j, b)| *b == i64::from(i == j)) {
                continue;
            }
            let pairing: i64 = (0..l).map(|j| beta[j] * cartan[j][i]).sum();
            let mut image = beta.clone();
            image[i] -= pairing;
            if image.iter().any(|c| *c < 0) {
                return Err(Error::InvalidDatum("root closure left the positive cone".into()));
            }
            if seen.insert(image.clone()) {
                found.push(image);
                if found.len() > MAX_POSITIVE_ROOTS {
                    return Err(Error::InvalidDatum("positive roots do not close up".into()));
                }
            }
        }
    }
    found.sort_by_key(|c| (c.iter().sum::<i64>(), c.clone()));
    let n = simple_roots.first().map_or(0, Vec::len);
    Ok(found
        .into_iter()
        .map(|coeffs| {
            let root = (0..n).map(|j| (0..l).map(|i| coeffs[i] * simple_roots[i][j]).sum()).collect();
            PositiveRoot { root, coeffs }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cw(v: &[i64]) -> Coweight {
        Coweight(v.to_vec())
    }

    #[test]
    fn gl2_coordinates() {
        let g = RootDatum::standard(Family::Gl, 2).unwrap();
        assert_eq!(g.simple_roots(), &[vec![1, -1]]);
        assert_eq!(g.simple_coroots(), &[vec![1, -1]]);
        assert_eq!(g.rank(), 2);
    }

    #[test]
    fn sl3_cartan() {
        let g = RootDatum::standard(Family::Sl, 3).unwrap();
        assert_eq!(g.rank(), 2);
        assert_eq!(g.cartan(), &[vec![2, -1], vec![-1, 2]]);
    }

    #[test]
    fn positive_root_counts() {
        for (name, count) in
            [("GL2", 1), ("GL3", 3), ("GL4", 6), ("SL3", 3), ("PGL3", 3), ("Sp4", 4), ("Sp6", 9), ("GL1", 0)]
        {
            let g = RootDatum::builtin(name).unwrap();
            assert_eq!(g.positive_roots().len(), count, "{name}");
        }
    }

    #[test]
    fn gl3_two_rho() {
        let g = RootDatum::builtin("GL3").unwrap();
        assert_eq!(g.two_rho(&cw(&[1, 0, -1])), 4);
        assert_eq!(g.two_rho(&cw(&[5, 5, 5])), 0);
        let g2 = RootDatum::builtin("GL2").unwrap();
        assert_eq!(g2.two_rho(&cw(&[1, 0])), 1);
    }

    #[test]
    fn dominance_examples() {
        let g = RootDatum::builtin("GL2").unwrap();
        assert!(g.is_dominant(&cw(&[1, 1])));
        assert!(!g.is_dominant(&cw(&[0, 1])));
        assert!(g.dominance_leq(&cw(&[1, 1]), &cw(&[2, 0])));
        assert!(g.dominance_leq(&cw(&[3, -1]), &cw(&[3, -1])));
        assert!(!g.dominance_leq(&cw(&[0, 0]), &cw(&[1, 0])));
        let g3 = RootDatum::builtin("GL3").unwrap();
        let l = Levi::from_indices([0]);
        assert!(g3.is_dominant_levi(&l, &cw(&[1, 0, 2])));
    }

    #[test]
    fn intervals() {
        let g = RootDatum::builtin("GL2").unwrap();
        assert_eq!(g.dominant_interval(&cw(&[1, 0])).unwrap(), vec![cw(&[1, 0])]);
        assert_eq!(g.dominant_interval(&cw(&[2, 0])).unwrap(), vec![cw(&[1, 1]), cw(&[2, 0])]);
        assert_eq!(g.dominant_interval(&cw(&[1, -1])).unwrap(), vec![cw(&[0, 0]), cw(&[1, -1])]);
        assert!(matches!(g.dominant_interval(&cw(&[0, 1])), Err(Error::NotDominant(_))));
    }

    #[test]
    fn interval_matches_brute_force_sp4() {
        let g = RootDatum::builtin("Sp4").unwrap();
        let lambda = cw(&[3, 1]);
        let got = g.dominant_interval(&lambda).unwrap();
        let mut brute = Vec::new();
        for a in -4..=4 {
            for b in -4..=4 {
                let mu = cw(&[a, b]);
                if g.is_dominant(&mu) && g.dominance_leq(&mu, &lambda) {
                    brute.push(mu);
                }
            }
        }
        brute.sort();
        assert_eq!(got, brute);
    }

    #[test]
    fn deg_p_examples() {
        let g = RootDatum::builtin("GL3").unwrap();
        let l = Levi::from_indices([0]);
        assert_eq!(g.deg_p(&l, &cw(&[0, 0, 1])), -2);
        assert_eq!(g.deg_p(&l, &cw(&[1, 0, 0])), 1);
        assert_eq!(g.deg_p(&g.full_levi(), &cw(&[4, -1, 2])), 0);
        // constant on cosets of the Levi coroot lattice
        assert_eq!(g.deg_p(&l, &cw(&[1, 0, 0]).add(&cw(&[3, -3, 0]))), 1);
    }

    #[test]
    fn rejects_bad_data() {
        assert!(RootDatum::standard(Family::Sp, 1).is_err());
        assert!(RootDatum::standard(Family::Gl, 0).is_err());
        // affine A1 Cartan matrix
        let bad = RootDatum::new("bad", 2, vec![vec![2, -2], vec![-2, 2]], vec![vec![1, -1], vec![-1, 1]]);
        assert!(bad.is_err());
        assert!(RootDatum::builtin("Sp5").is_err());
        assert!(RootDatum::builtin("E8").is_err());
    }
}
