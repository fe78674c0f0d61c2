use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intmat::{self, Matrix};
use crate::root_datum::{Coweight, RootDatum};

/// Finite generating set of the monoid `X_*(T)_-` of antidominant
/// cocharacters.
///
/// Write `φ(ν) = (−⟨α, ν⟩)_{α ∈ Δ}`. Then `X_*(T)_- = φ^{-1}(N^Δ)`, the kernel
/// of `φ` is the unit group `Δ^⊥`, and `X_*(T)_-/Δ^⊥` is the pointed monoid
/// `φ(X_*(T)) ∩ N^Δ`. Its Hilbert basis lies in the box spanned by the
/// minimal lattice multiples `m_α e_α` of the extreme rays; lifting it and
/// adding `±` a basis of `Δ^⊥` generates `X_*(T)_-`.
#[derive(Clone, Debug)]
pub struct AntidominantMonoid {
    datum: Arc<RootDatum>,
    generators: Vec<Coweight>,
    pointed: Vec<Vec<i64>>,
    ray_multiples: Vec<i64>,
    lineality_basis: Vec<Coweight>,
    lineality_hnf: Matrix,
}

impl AntidominantMonoid {
    pub fn new(datum: Arc<RootDatum>) -> Result<Self> {
        let n = datum.rank();
        let l = datum.semisimple_rank();
        let lineality_hnf = intmat::kernel(datum.simple_roots(), n);
        let lineality_basis: Vec<Coweight> = lineality_hnf.iter().cloned().map(Coweight).collect();

        // columns of φ: images of the standard basis vectors
        let image_cols: Matrix = (0..n).map(|j| datum.simple_roots().iter().map(|a| -a[j]).collect()).collect();
        let in_image = |y: &[i64]| intmat::solve_integer(&image_cols, y).is_some();

        let index = lattice_index(&image_cols, l);
        let ray_multiples: Vec<i64> = (0..l)
            .map(|i| {
                (1..=index)
                    .find(|&k| {
                        let mut e = vec![0; l];
                        e[i] = k;
                        in_image(&e)
                    })
                    .expect("a multiple of every ray lies in a full-rank lattice")
            })
            .collect();

        // lattice points of the box ∏ [0, m_α]
        let mut boxed: Vec<Vec<i64>> = Vec::new();
        let mut cur = vec![0i64; l];
        loop {
            if cur.iter().any(|c| *c != 0) && in_image(&cur) {
                boxed.push(cur.clone());
            }
            let mut i = 0;
            while i < l {
                cur[i] += 1;
                if cur[i] <= ray_multiples[i] {
                    break;
                }
                cur[i] = 0;
                i += 1;
            }
            if i == l {
                break;
            }
        }
        let member: HashSet<Vec<i64>> = boxed.iter().cloned().collect();
        let mut pointed: Vec<Vec<i64>> = boxed
            .iter()
            .filter(|y| {
                !boxed.iter().any(|z| {
                    z != *y && {
                        let diff: Vec<i64> = y.iter().zip(z).map(|(a, b)| a - b).collect();
                        member.contains(&diff)
                    }
                })
            })
            .cloned()
            .collect();
        pointed.sort_by_key(|y| (y.iter().sum::<i64>(), y.clone()));

        let mut generators = Vec::new();
        for y in &pointed {
            let nu = intmat::solve_integer(&image_cols, y).expect("box points lie in the image");
            generators.push(Coweight(intmat::reduce_mod(&nu, &lineality_hnf)));
        }
        for b in &lineality_basis {
            generators.push(b.clone());
            generators.push(b.neg());
        }
        Ok(AntidominantMonoid { datum, generators, pointed, ray_multiples, lineality_basis, lineality_hnf })
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    /// Pointed generators (sorted by total pairing, then lexicographically),
    /// followed by `+b, −b` for each basis vector `b` of `Δ^⊥`.
    pub fn generators(&self) -> &[Coweight] {
        &self.generators
    }

    pub fn pointed_len(&self) -> usize {
        self.pointed.len()
    }

    pub fn lineality_basis(&self) -> &[Coweight] {
        &self.lineality_basis
    }

    /// The `w_0`-images of the generators: a generating set of the dominant
    /// monoid `X_*(T)^+`, index-aligned with [`generators`](Self::generators).
    pub fn dominant_generators(&self) -> Vec<Coweight> {
        let w0 = self.datum.longest_element();
        self.generators.iter().map(|g| w0.apply(g).expect("generator has the datum's rank")).collect()
    }

    /// For each simple root `α`, the antidominant `λ_α` with `⟨β, λ_α⟩ = 0`
    /// for `β ≠ α` and `⟨α, λ_α⟩ = −m_α` as close to zero as the lattice
    /// allows; canonical modulo `Δ^⊥`.
    pub fn lambda_alpha(&self) -> Vec<Coweight> {
        let l = self.datum.semisimple_rank();
        let n = self.datum.rank();
        let image_cols: Matrix = (0..n).map(|j| self.datum.simple_roots().iter().map(|a| -a[j]).collect()).collect();
        (0..l)
            .map(|i| {
                let mut e = vec![0; l];
                e[i] = self.ray_multiples[i];
                let nu = intmat::solve_integer(&image_cols, &e).expect("ray multiple is in the image");
                Coweight(intmat::reduce_mod(&nu, &self.lineality_hnf))
            })
            .collect()
    }

    /// Canonical representative of `ν` modulo `Δ^⊥`.
    pub fn reduce_mod_units(&self, nu: &Coweight) -> Coweight {
        Coweight(intmat::reduce_mod(&nu.0, &self.lineality_hnf))
    }

    fn pairing_image(&self, nu: &Coweight) -> Vec<i64> {
        (0..self.datum.semisimple_rank()).map(|i| -self.datum.pair_simple(i, nu)).collect()
    }

    /// Exponents `e` with `Σ e_i g_i = λ` for an antidominant `λ`. Any valid
    /// factorization is returned; the pointed part is found by bounded
    /// depth-first search.
    pub fn factor(&self, lambda: &Coweight) -> Result<Vec<u64>> {
        self.datum.check(lambda)?;
        if !self.datum.is_antidominant(lambda) {
            return Err(Error::NotAntidominant(lambda.0.clone()));
        }
        let target = self.pairing_image(lambda);
        let mut failed = HashSet::new();
        let mut counts = vec![0u64; self.generators.len()];
        if !decompose(&self.pointed, &target, &mut counts, &mut failed) {
            return Err(Error::Factorization(lambda.0.clone()));
        }
        let mut residual = lambda.clone();
        for (k, c) in counts.iter().enumerate().take(self.pointed.len()) {
            residual = residual.sub(&self.generators[k].scale(*c as i64));
        }
        let basis: Matrix = self.lineality_basis.iter().map(|b| b.0.clone()).collect();
        let coords =
            intmat::solve_integer(&basis, &residual.0).ok_or_else(|| Error::Factorization(lambda.0.clone()))?;
        let base = self.pointed.len();
        for (j, c) in coords.iter().enumerate() {
            if *c >= 0 {
                counts[base + 2 * j] = *c as u64;
            } else {
                counts[base + 2 * j + 1] = c.unsigned_abs();
            }
        }
        Ok(counts)
    }

    /// Recombines exponents into a coweight.
    pub fn combine(&self, exponents: &[u64]) -> Coweight {
        let mut out = Coweight::zero(self.datum.rank());
        for (g, e) in self.generators.iter().zip(exponents) {
            out = out.add(&g.scale(*e as i64));
        }
        out
    }

    /// Checks that every antidominant point of `[−bound, bound]^n` factors
    /// over the generators. Returns the number of points certified.
    pub fn certify_generation(&self, bound: i64) -> Result<usize> {
        let n = self.datum.rank();
        let mut certified = 0;
        for lambda in box_points(n, -bound, bound) {
            if self.datum.is_antidominant(&lambda) {
                let e = self.factor(&lambda)?;
                if self.combine(&e) != lambda {
                    return Err(Error::Factorization(lambda.0));
                }
                certified += 1;
            }
        }
        Ok(certified)
    }

    pub fn relations(&self, degree_bound: u64) -> Vec<BinomialRelation> {
        binomial_relations(&self.generators, degree_bound)
    }

    /// Cosets of the unit group `Δ^⊥` met by the antidominant points of the
    /// window `[0, bound]^n`; each class's representative is its
    /// lexicographically smallest member in the window.
    pub fn coset_decomposition(&self, bound: i64) -> CosetDecomposition {
        let n = self.datum.rank();
        let mut classes: BTreeMap<Coweight, Vec<Coweight>> = BTreeMap::new();
        for lambda in box_points(n, 0, bound) {
            if self.datum.is_antidominant(&lambda) {
                classes.entry(self.reduce_mod_units(&lambda)).or_default().push(lambda);
            }
        }
        let mut out: Vec<CosetClass> = classes
            .into_values()
            .map(|mut members| {
                members.sort();
                let rep = members[0].clone();
                let members = members
                    .into_iter()
                    .map(|m| {
                        let unit = m.sub(&rep);
                        (m, unit)
                    })
                    .collect();
                CosetClass { representative: rep, members }
            })
            .collect();
        out.sort_by(|a, b| a.representative.cmp(&b.representative));
        CosetDecomposition { classes: out }
    }
}

fn lattice_index(cols: &[Vec<i64>], l: usize) -> i64 {
    if l == 0 {
        return 1;
    }
    let a: Matrix = (0..l).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
    intmat::smith(&a, cols.len()).diag.iter().product()
}

fn decompose(pointed: &[Vec<i64>], target: &[i64], counts: &mut [u64], failed: &mut HashSet<Vec<i64>>) -> bool {
    if target.iter().all(|x| *x == 0) {
        return true;
    }
    if failed.contains(target) {
        return false;
    }
    for (k, y) in pointed.iter().enumerate() {
        if y.iter().zip(target).all(|(a, t)| a <= t) {
            let rest: Vec<i64> = target.iter().zip(y).map(|(t, a)| t - a).collect();
            counts[k] += 1;
            if decompose(pointed, &rest, counts, failed) {
                return true;
            }
            counts[k] -= 1;
        }
    }
    failed.insert(target.to_vec());
    false
}

pub(crate) fn box_points(n: usize, lo: i64, hi: i64) -> impl Iterator<Item = Coweight> {
    let width = (hi - lo + 1).max(0) as u64;
    let total = width.pow(n as u32);
    (0..total).map(move |mut idx| {
        let mut v = vec![0i64; n];
        for slot in v.iter_mut().rev() {
            *slot = lo + (idx % width) as i64;
            idx /= width;
        }
        Coweight(v)
    })
}

/// `Σ left_i g_i = Σ right_i g_i`, with exponent vectors of disjoint support.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BinomialRelation {
    pub left: Vec<u64>,
    pub right: Vec<u64>,
}

impl BinomialRelation {
    pub fn degree(&self) -> u64 {
        self.left.iter().sum::<u64>().max(self.right.iter().sum())
    }

    /// Multiplicative form in the semigroup ring, generators named
    /// `x, y, z, u, v, w, …` in order, e.g. `x^3 = yz`.
    pub fn monomial_form(&self) -> String {
        const NAMES: &[&str] = &["x", "y", "z", "u", "v", "w", "r", "s"];
        let mono = |e: &[u64]| {
            let s: String = e
                .iter()
                .enumerate()
                .filter(|(_, c)| **c > 0)
                .map(|(i, c)| {
                    let name = NAMES.get(i).map(|n| n.to_string()).unwrap_or_else(|| format!("g{}", i + 1));
                    if *c == 1 {
                        name
                    } else {
                        format!("{name}^{c}")
                    }
                })
                .collect();
            if s.is_empty() {
                "1".to_string()
            } else {
                s
            }
        };
        format!("{} = {}", mono(&self.left), mono(&self.right))
    }

    fn implied_by(&self, other: &BinomialRelation) -> bool {
        let le = |a: &[u64], b: &[u64]| a.iter().zip(b).all(|(x, y)| x <= y);
        (le(&other.left, &self.left) && le(&other.right, &self.right))
            || (le(&other.left, &self.right) && le(&other.right, &self.left))
    }
}

fn side(f: &mut fmt::Formatter<'_>, e: &[u64]) -> fmt::Result {
    let terms: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, c)| **c > 0)
        .map(|(i, c)| if *c == 1 { format!("g{}", i + 1) } else { format!("{c}·g{}", i + 1) })
        .collect();
    if terms.is_empty() {
        write!(f, "0")
    } else {
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Display for BinomialRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        side(f, &self.left)?;
        write!(f, " = ")?;
        side(f, &self.right)
    }
}

/// Primitive binomial relations among `generators` of degree at most
/// `degree_bound`: disjoint supports, each side of total degree `≤ bound`,
/// and not implied by a smaller relation (componentwise domination in either
/// orientation). The left side is the lexicographically larger exponent
/// vector.
pub fn binomial_relations(generators: &[Coweight], degree_bound: u64) -> Vec<BinomialRelation> {
    let g = generators.len();
    let Some(first) = generators.first() else {
        return Vec::new();
    };
    let n = first.len();
    let mut by_sum: HashMap<Coweight, Vec<Vec<u64>>> = HashMap::new();
    let mut stack = vec![(0usize, vec![0u64; g], 0u64)];
    while let Some((k, e, deg)) = stack.pop() {
        if k == g {
            let mut sum = Coweight::zero(n);
            for (gen, c) in generators.iter().zip(&e) {
                sum = sum.add(&gen.scale(*c as i64));
            }
            by_sum.entry(sum).or_default().push(e);
            continue;
        }
        for c in 0..=(degree_bound - deg) {
            let mut next = e.clone();
            next[k] = c;
            stack.push((k + 1, next, deg + c));
        }
    }
    let mut found: Vec<BinomialRelation> = Vec::new();
    for group in by_sum.values() {
        for (i, a) in group.iter().enumerate() {
            for b in &group[i + 1..] {
                let disjoint = a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0);
                if !disjoint {
                    continue;
                }
                let (left, right) = if a > b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
                found.push(BinomialRelation { left, right });
            }
        }
    }
    let mut primitive: Vec<BinomialRelation> =
        found.iter().filter(|r| !found.iter().any(|o| o != *r && r.implied_by(o))).cloned().collect();
    primitive.sort_by_key(|r| (r.degree(), r.clone()));
    primitive.dedup();
    primitive
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetClass {
    pub representative: Coweight,
    /// `(λ, u)` with `λ = representative + u` and `u ∈ Δ^⊥`.
    pub members: Vec<(Coweight, Coweight)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetDecomposition {
    pub classes: Vec<CosetClass>,
}

impl CosetDecomposition {
    pub fn representatives(&self) -> Vec<Coweight> {
        self.classes.iter().map(|c| c.representative.clone()).collect()
    }

    /// `(representative, unit)` for a window point.
    pub fn decompose(&self, lambda: &Coweight) -> Option<(Coweight, Coweight)> {
        self.classes.iter().find_map(|c| {
            c.members.iter().find(|(m, _)| m == lambda).map(|(_, u)| (c.representative.clone(), u.clone()))
        })
    }
}
