use std::collections::BTreeSet;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Coweight, RootDatum};
use crate::error::{Error, Result};
use crate::intmat::{self, Matrix};

/// A standard Levi, recorded by its set of simple roots `Δ_L` (0-based
/// indices internally; serialized 1-based).
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Levi {
    indices: BTreeSet<usize>,
}

impl Levi {
    pub fn torus() -> Self {
        Levi::default()
    }

    pub fn full(datum: &RootDatum) -> Self {
        Levi::from_indices(0..datum.semisimple_rank())
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        Levi { indices: indices.into_iter().collect() }
    }

    /// Validated constructor from 1-based indices.
    pub fn from_one_based(datum: &RootDatum, indices: &[usize]) -> Result<Self> {
        let l = datum.semisimple_rank();
        let mut set = BTreeSet::new();
        for &i in indices {
            if i == 0 || i > l {
                return Err(Error::InvalidLevi(format!("index {i} outside 1..={l} for {}", datum.name())));
            }
            set.insert(i - 1);
        }
        Ok(Levi { indices: set })
    }

    pub fn validate(&self, datum: &RootDatum) -> Result<()> {
        match self.indices.iter().next_back() {
            Some(&i) if i >= datum.semisimple_rank() => {
                Err(Error::InvalidLevi(format!("index {} outside 1..={}", i + 1, datum.semisimple_rank())))
            }
            _ => Ok(()),
        }
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.indices.iter().map(|i| i + 1).collect()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.contains(&i)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.indices.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn is_subset(&self, other: &Levi) -> bool {
        self.indices.is_subset(&other.indices)
    }

    pub fn union(&self, other: &Levi) -> Levi {
        Levi { indices: self.indices.union(&other.indices).copied().collect() }
    }

    pub fn intersection(&self, other: &Levi) -> Levi {
        Levi { indices: self.indices.intersection(&other.indices).copied().collect() }
    }
}

impl Serialize for Levi {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_based().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Levi {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<usize> = Vec::deserialize(d)?;
        if v.contains(&0) {
            return Err(serde::de::Error::custom("Levi indices are 1-based"));
        }
        Ok(Levi::from_indices(v.into_iter().map(|i| i - 1)))
    }
}

/// `π_1(L) = X_*(T)/ZΦ_L^∨`, presented through the Smith normal form of the
/// matrix whose columns are the simple coroots of `L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentGroup {
    pub free_rank: usize,
    /// Invariant factors `> 1`.
    pub torsion: Vec<i64>,
    projection: Matrix,
    diag: Vec<i64>,
    coroot_hnf: Matrix,
}

impl ComponentGroup {
    /// Coordinates of the image of `ν`: torsion coordinates reduced into
    /// `[0, d)`, followed by the free coordinates.
    pub fn project(&self, nu: &Coweight) -> Vec<i64> {
        let y = intmat::mat_vec(&self.projection, &nu.0);
        let mut out = Vec::new();
        for (i, yi) in y.iter().enumerate() {
            match self.diag.get(i).copied().unwrap_or(0) {
                0 => out.push(*yi),
                1 => {}
                d => out.push(yi.rem_euclid(d)),
            }
        }
        out
    }

    /// Canonical coweight representing the component of `ν`.
    pub fn representative(&self, nu: &Coweight) -> Coweight {
        Coweight(intmat::reduce_mod(&nu.0, &self.coroot_hnf))
    }
}

impl RootDatum {
    pub fn component_group(&self, levi: &Levi) -> ComponentGroup {
        let n = self.rank();
        let coroots: Matrix = levi.iter().map(|i| self.simple_coroots()[i].clone()).collect();
        let cols = coroots.len();
        let a: Matrix = (0..n).map(|r| coroots.iter().map(|c| c[r]).collect()).collect();
        let s = intmat::smith(&a, cols);
        let rank = s.rank();
        let mut diag = s.diag.clone();
        diag.resize(n, 0);
        ComponentGroup {
            free_rank: n - rank,
            torsion: s.diag.iter().copied().filter(|d| *d > 1).collect(),
            projection: s.left,
            diag,
            coroot_hnf: intmat::hermite_rows(&coroots, n),
        }
    }

    /// Canonical representative of the component of `Gr_L` containing `ν`.
    pub fn component_of(&self, levi: &Levi, nu: &Coweight) -> Coweight {
        self.component_group(levi).representative(nu)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn component_groups() {
        let g = RootDatum::builtin("GL3").unwrap();
        let t = g.component_group(&Levi::torus());
        assert_eq!((t.free_rank, t.torsion.clone()), (3, vec![]));
        let l = g.component_group(&Levi::from_indices([0]));
        assert_eq!((l.free_rank, l.torsion.clone()), (2, vec![]));
        let full = g.component_group(&g.full_levi());
        assert_eq!((full.free_rank, full.torsion.clone()), (1, vec![]));

        // simply connected: X_* is the coroot lattice
        let sl2 = RootDatum::builtin("SL2").unwrap();
        let c = sl2.component_group(&sl2.full_levi());
        assert_eq!((c.free_rank, c.torsion.clone()), (0, vec![]));

        // adjoint: α^∨ = 2ϖ^∨
        let pgl2 = RootDatum::builtin("PGL2").unwrap();
        let c = pgl2.component_group(&pgl2.full_levi());
        assert_eq!((c.free_rank, c.torsion.clone()), (0, vec![2]));
        assert_eq!(c.project(&Coweight(vec![3])), vec![1]);
        assert_eq!(c.project(&Coweight(vec![4])), vec![0]);
    }

    #[test]
    fn component_of_is_coset_invariant() {
        let g = RootDatum::builtin("GL3").unwrap();
        let l = Levi::from_indices([0]);
        let a = g.component_of(&l, &Coweight(vec![2, 0, 1]));
        let b = g.component_of(&l, &Coweight(vec![0, 2, 1]));
        let c = g.component_of(&l, &Coweight(vec![0, 1, 2]));
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn levi_json_is_one_based() {
        let l = Levi::from_indices([0, 2]);
        assert_eq!(serde_json::to_string(&l).unwrap(), "[1,3]");
        let back: Levi = serde_json::from_str("[1,3]").unwrap();
        assert_eq!(back, l);
        assert!(serde_json::from_str::<Levi>("[0]").is_err());
    }
}
