use serde::Serialize;

use crate::intmat;
use crate::root_datum::{Coweight, Levi, RootDatum};

/// The locus of parameters whose zero set is cut out by exactly `Δ_L`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Stratum {
    pub levi: Levi,
    /// Rank of the lattice `Δ_L^⊥`, i.e. the dimension of the stratum.
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Stratification {
    pub strata: Vec<Stratum>,
}

impl Stratification {
    /// `S_inner ⊆ closure(S_outer)` iff `Δ_inner ⊇ Δ_outer`.
    pub fn closure_contains(&self, outer: &Levi, inner: &Levi) -> bool {
        outer.is_subset(inner)
    }

    pub fn closure(&self, outer: &Levi) -> Vec<&Stratum> {
        self.strata.iter().filter(|s| outer.is_subset(&s.levi)).collect()
    }
}

/// Canonical (Hermite-normalized) basis of `Δ_L^⊥ = {λ : ⟨α, λ⟩ = 0, α ∈ Δ_L}`.
pub fn perp_basis(datum: &RootDatum, levi: &Levi) -> Vec<Coweight> {
    let rows: Vec<Vec<i64>> = levi.iter().map(|i| datum.simple_roots()[i].clone()).collect();
    intmat::kernel(&rows, datum.rank()).into_iter().map(Coweight).collect()
}

/// One stratum per subset of `Δ`, ordered by index set.
pub fn strata(datum: &RootDatum) -> Stratification {
    let strata = datum
        .levis()
        .into_iter()
        .map(|levi| {
            let rank = perp_basis(datum, &levi).len();
            Stratum { levi, rank }
        })
        .collect();
    Stratification { strata }
}
