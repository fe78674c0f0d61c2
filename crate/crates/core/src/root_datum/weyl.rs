use std::collections::{HashMap, HashSet, VecDeque};

use super::{Coweight, Levi, RootDatum};
use crate::error::{Error, Result};
use crate::intmat::{self, Matrix};

/// Hard cap on enumerated Weyl groups.
pub const MAX_WEYL_ORDER: usize = 100_000;

/// An element of the Weyl group: its action on cocharacters, its action on
/// characters, and one reduced word in the simple reflections (0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    matrix: Matrix,
    dual: Matrix,
    word: Vec<usize>,
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        WeylElement { matrix: intmat::identity(n), dual: intmat::identity(n), word: Vec::new() }
    }

    pub fn simple_reflection(datum: &RootDatum, i: usize) -> Self {
        let n = datum.rank();
        let root = &datum.simple_roots()[i];
        let coroot = &datum.simple_coroots()[i];
        let matrix = (0..n).map(|r| (0..n).map(|c| i64::from(r == c) - coroot[r] * root[c]).collect()).collect();
        let dual = (0..n).map(|r| (0..n).map(|c| i64::from(r == c) - root[r] * coroot[c]).collect()).collect();
        WeylElement { matrix, dual, word: vec![i] }
    }

    /// Action matrix on cocharacter coordinates.
    pub fn action_matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// `self ∘ other`; the word is the concatenation (not necessarily reduced).
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        WeylElement {
            matrix: intmat::mat_mul(&self.matrix, &other.matrix),
            dual: intmat::mat_mul(&self.dual, &other.dual),
            word,
        }
    }

    pub fn apply(&self, mu: &Coweight) -> Result<Coweight> {
        if mu.len() != self.matrix.len() {
            return Err(Error::DimensionMismatch { expected: self.matrix.len(), got: mu.len() });
        }
        Ok(Coweight(intmat::mat_vec(&self.matrix, &mu.0)))
    }

    /// `w(β)` for a character `β`.
    pub fn apply_root(&self, beta: &[i64]) -> Vec<i64> {
        intmat::mat_vec(&self.dual, beta)
    }

    /// `w^{-1}(β)` for a character `β`; the inverse acts on characters by the
    /// transpose of the cocharacter matrix.
    pub fn apply_root_inverse(&self, beta: &[i64]) -> Vec<i64> {
        let n = self.matrix.len();
        (0..n).map(|c| (0..n).map(|r| self.matrix[r][c] * beta[r]).sum()).collect()
    }

    /// Replays the stored word and compares with the stored matrix.
    pub fn word_is_consistent(&self, datum: &RootDatum) -> bool {
        let mut w = WeylElement::identity(datum.rank());
        for &i in &self.word {
            w = w.compose(&WeylElement::simple_reflection(datum, i));
        }
        w.matrix == self.matrix
    }
}

/// `t^ν w` in the Iwahori–Weyl group `X_*(T) ⋊ W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineWeylElement {
    pub translation: Coweight,
    pub finite_part: WeylElement,
}

impl AffineWeylElement {
    pub fn translation(datum: &RootDatum, nu: Coweight) -> Self {
        AffineWeylElement { translation: nu, finite_part: WeylElement::identity(datum.rank()) }
    }
}

impl RootDatum {
    fn positive_root_set(&self) -> HashSet<&[i64]> {
        self.positive_roots().iter().map(|r| r.root.as_slice()).collect()
    }

    pub fn is_positive_root(&self, beta: &[i64]) -> bool {
        self.positive_roots().iter().any(|r| r.root == beta)
    }

    pub fn longest_element(&self) -> WeylElement {
        self.longest_element_levi(&self.full_levi())
    }

    /// `w_0^L`: extend the word by any `s_i`, `i ∈ Δ_L`, with `w(α_i) > 0`
    /// until none is left. Each step increases the length by one.
    pub fn longest_element_levi(&self, levi: &Levi) -> WeylElement {
        let positive = self.positive_root_set();
        let mut w = WeylElement::identity(self.rank());
        loop {
            let next = levi.iter().find(|&i| positive.contains(w.apply_root(&self.simple_roots()[i]).as_slice()));
            match next {
                Some(i) => w = w.compose(&WeylElement::simple_reflection(self, i)),
                None => return w,
            }
        }
    }

    pub fn weyl_group(&self) -> Result<Vec<WeylElement>> {
        self.weyl_group_levi(&self.full_levi())
    }

    /// Breadth-first closure from the simple reflections of `L`, deduplicated
    /// by matrix. Words are shortest, hence reduced.
    pub fn weyl_group_levi(&self, levi: &Levi) -> Result<Vec<WeylElement>> {
        let gens: Vec<WeylElement> = levi.iter().map(|i| WeylElement::simple_reflection(self, i)).collect();
        let id = WeylElement::identity(self.rank());
        let mut index: HashMap<Matrix, usize> = HashMap::new();
        index.insert(id.matrix.clone(), 0);
        let mut elems = vec![id];
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for g in &gens {
                let next = elems[k].compose(g);
                if !index.contains_key(&next.matrix) {
                    if elems.len() >= MAX_WEYL_ORDER {
                        return Err(Error::WeylGroupTooLarge(MAX_WEYL_ORDER));
                    }
                    index.insert(next.matrix.clone(), elems.len());
                    queue.push_back(elems.len());
                    elems.push(next);
                }
            }
        }
        Ok(elems)
    }

    /// Iwahori–Weyl length
    /// `ℓ(t^ν w) = Σ_{α>0, w⁻¹α>0} |⟨α,ν⟩| + Σ_{α>0, w⁻¹α<0} |⟨α,ν⟩ + 1|`.
    pub fn length(&self, x: &AffineWeylElement) -> Result<u64> {
        self.check(&x.translation)?;
        let positive = self.positive_root_set();
        Ok(self
            .positive_roots()
            .iter()
            .map(|r| {
                let pairing = intmat::dot(&r.root, &x.translation.0);
                let image = x.finite_part.apply_root_inverse(&r.root);
                if positive.contains(image.as_slice()) {
                    pairing.unsigned_abs()
                } else {
                    (pairing + 1).unsigned_abs()
                }
            })
            .sum())
    }

    /// Membership in `Ω`, the length-zero subgroup.
    pub fn is_length_zero(&self, x: &AffineWeylElement) -> Result<bool> {
        Ok(self.length(x)? == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cw(v: &[i64]) -> Coweight {
        Coweight(v.to_vec())
    }

    #[test]
    fn longest_elements_gl3() {
        let g = RootDatum::builtin("GL3").unwrap();
        let w0 = g.longest_element();
        assert_eq!(w0.action_matrix(), &vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
        assert_eq!(w0.length(), 3);
        assert!(w0.word_is_consistent(&g));
        assert_eq!(w0.apply(&cw(&[2, 0, -1])).unwrap(), cw(&[-1, 0, 2]));

        let l = Levi::from_indices([0]);
        let w0l = g.longest_element_levi(&l);
        assert_eq!(w0l.action_matrix(), &vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]);
        assert_eq!(w0l.apply(&cw(&[2, 1, 0])).unwrap(), cw(&[1, 2, 0]));
    }

    #[test]
    fn w0_is_involution() {
        for name in ["GL2", "GL4", "SL3", "Sp4", "PGL3"] {
            let g = RootDatum::builtin(name).unwrap();
            let w0 = g.longest_element();
            let sq = w0.compose(&w0);
            assert_eq!(sq.action_matrix(), &intmat::identity(g.rank()), "{name}");
        }
    }

    #[test]
    fn weyl_orders() {
        for (name, order) in [("GL2", 2), ("GL3", 6), ("GL4", 24), ("SL3", 6), ("Sp4", 8), ("Sp6", 48)] {
            let g = RootDatum::builtin(name).unwrap();
            let w = g.weyl_group().unwrap();
            assert_eq!(w.len(), order, "{name}");
            let longest = w.iter().map(WeylElement::length).max().unwrap();
            assert_eq!(longest, g.positive_roots().len());
            assert!(w.iter().all(|x| x.word_is_consistent(&g)));
        }
    }

    #[test]
    fn identity_apply_and_mismatch() {
        let id = WeylElement::identity(3);
        assert_eq!(id.apply(&cw(&[4, -2, 7])).unwrap(), cw(&[4, -2, 7]));
        assert!(id.apply(&cw(&[1, 2])).is_err());
    }

    #[test]
    fn length_examples() {
        let g = RootDatum::builtin("GL2").unwrap();
        let w0 = g.longest_element();
        let e = WeylElement::identity(2);
        let x = |nu: &[i64], w: &WeylElement| AffineWeylElement { translation: cw(nu), finite_part: w.clone() };
        assert_eq!(g.length(&x(&[1, 1], &e)).unwrap(), 0);
        assert!(g.is_length_zero(&x(&[1, 1], &e)).unwrap());
        assert_eq!(g.length(&x(&[1, 0], &e)).unwrap(), 1);
        assert_eq!(g.length(&x(&[1, 0], &w0)).unwrap(), 2);
        assert_eq!(g.length(&x(&[0, 0], &w0)).unwrap(), 1);
    }
}
